"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 conjecture mismatch.
"""

import argparse
import json
import sys
import warnings

from .ideal import CONJECTURE_WHITELIST, conjecture_instance
from .parser import ParseError, parse_polynomial
from .resultants import discriminant, subdiscriminant
from .strata import (
    MAX_SYMBOLIC_DEGREE,
    CoefficientPoint,
    Partition,
    classify_by_gcd,
    classify_by_order,
    classify_by_subdiscriminants,
    sample_coincident_locus,
    stratum_report,
    t_valuation_constant_shift,
)
from .surface import DEFAULT_CAP, DEFAULT_PRECISION, DEFAULT_RESOLUTION, SurfaceGrid, write_csv
from .verify import VERIFY_DEGREES, derive_seed, run_suite

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_MISMATCH = 3


class UsageError(Exception):
    pass


def _emit(obj, out):
    out.write(json.dumps(obj) + "\n")


def _parse_for_classify(text, err):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        p = parse_polynomial(text, monic=True, min_degree=2)
    for w in caught:
        err.write(f"warning: {w.message}\n")
    return CoefficientPoint.from_poly(p)


def cmd_classify(args, out, err):
    gamma = _parse_for_classify(args.poly, err)
    n = gamma.n
    if args.method == "all":
        if n > MAX_SYMBOLIC_DEGREE:
            raise UsageError(
                f"degree {n} exceeds the symbolic range 2..{MAX_SYMBOLIC_DEGREE}; "
                "pass --method gcd, subdisc or tval"
            )
        _emit(stratum_report(gamma).to_dict(), out)
        return EXIT_OK
    if args.method == "order" and n > MAX_SYMBOLIC_DEGREE:
        raise UsageError(f"--method order supports degrees 2..{MAX_SYMBOLIC_DEGREE}")
    if args.method == "tval":
        m = n - t_valuation_constant_shift(gamma)
    else:
        m = {"gcd": classify_by_gcd, "subdisc": classify_by_subdiscriminants,
             "order": classify_by_order}[args.method](gamma)
    _emit({"n": n, "method": args.method, "m": m}, out)
    return EXIT_OK


def cmd_generic(args, out, err):
    n = args.n
    if not 2 <= n <= MAX_SYMBOLIC_DEGREE:
        raise UsageError(f"generic supports degrees 2..{MAX_SYMBOLIC_DEGREE}")
    if args.what == "discriminant":
        D = discriminant(n)
        if args.json:
            _emit({"n": n, "D": str(D), "terms": len(D.terms)}, out)
        else:
            out.write(str(D) + "\n")
        return EXIT_OK
    polys = [subdiscriminant(n, k) for k in range(n)]
    if args.json:
        _emit({"n": n, "subdiscriminants": {f"D_{k}": str(p) for k, p in enumerate(polys)}}, out)
    else:
        for k, p in enumerate(polys):
            out.write(f"D_{k} = {p}\n")
    return EXIT_OK


def _partition_arg(text):
    try:
        return Partition(int(part) for part in text.split(","))
    except ValueError as exc:
        raise UsageError(f"invalid partition {text!r}") from exc


def cmd_sample(args, out, err):
    mu = _partition_arg(args.partition)
    if not 2 <= mu.n <= MAX_SYMBOLIC_DEGREE:
        raise UsageError(f"partitions must sum to 2..{MAX_SYMBOLIC_DEGREE}")
    if args.count < 1:
        raise UsageError("--count must be positive")
    status = EXIT_OK
    for i in range(args.count):
        seed = derive_seed(args.seed, 0, i)
        gamma = sample_coincident_locus(mu, seed)
        report = stratum_report(gamma)
        if not report.consistent:
            status = EXIT_FAILURE
        _emit({"mu": list(mu), "seed": seed, "gamma": gamma.to_json(),
               "report": report.to_dict()}, out)
    return status


def cmd_verify(args, out, err):
    if args.degree not in VERIFY_DEGREES:
        raise UsageError(
            f"verify supports degrees {VERIFY_DEGREES.start}..{VERIFY_DEGREES.stop - 1}"
        )
    if args.trials < 1 or args.workers < 1:
        raise UsageError("--trials and --workers must be positive")
    report = run_suite(args.degree, args.trials, args.seed, workers=args.workers)
    out.write(report.to_json(include_elapsed=not args.no_elapsed) + "\n")
    return EXIT_OK if report.passed else EXIT_FAILURE


def _assignment(text, flag):
    # "a_3=0" -> (3, "0")
    try:
        name, value = text.split("=", 1)
        name = name.strip()
        if not name.startswith("a_"):
            raise ValueError
        return int(name[2:]), value.strip()
    except ValueError as exc:
        raise UsageError(f"{flag} expects a_i=VALUE, got {text!r}") from exc


def _interval(text):
    lo, sep, hi = text.partition(":")
    if not sep:
        raise UsageError(f"range must be LO:HI, got {text!r}")
    return lo, hi


def cmd_surface(args, out, err):
    fixed = dict(_assignment(f, "--fix") for f in args.fix)
    ranges = {}
    default_range = None
    for item in args.range:
        if "=" in item:
            i, interval = _assignment(item, "--range")
            ranges[i] = _interval(interval)
        else:
            default_range = _interval(item)
    try:
        if default_range is not None:
            free = [i for i in range(args.degree) if i not in fixed]
            if args.degree == 4 and not fixed:
                free = [0, 1, 2]
            for i in free:
                ranges.setdefault(i, default_range)
        grid = SurfaceGrid(args.degree, args.resolution, ranges, fixed, args.cap)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from exc
    if args.out == "-":
        count = write_csv(grid, out, args.precision)
    else:
        count = write_csv(grid, args.out, args.precision)
        err.write(f"wrote {count} rows to {args.out}\n")
    return EXIT_OK


def cmd_conjecture(args, out, err):
    n, k = args.degree, args.k
    if not 1 <= k <= n - 1 or n < 2:
        raise UsageError("need 1 <= k <= n-1")
    if (n, k) not in CONJECTURE_WHITELIST and not args.allow_slow:
        allowed = ", ".join(str(p) for p in sorted(CONJECTURE_WHITELIST))
        raise UsageError(f"(n, k) = ({n}, {k}) is outside {allowed}; pass --allow-slow")
    if not 2 <= n <= MAX_SYMBOLIC_DEGREE:
        raise UsageError(f"degree must lie in 2..{MAX_SYMBOLIC_DEGREE}")
    if args.s_max < 1:
        raise UsageError("--s-max must be positive")
    result = conjecture_instance(n, k, args.s_max)
    if not result["vanishes_on_locus"]:
        err.write(f"note: D_{k} does not vanish on Z_{k} for n={n}; no power can lie in the ideal\n")
    _emit(result, out)
    return EXIT_OK if result["matches"] else EXIT_MISMATCH


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser():
    parser = _Parser(prog="discstrata", description="Exact stratification of the discriminant hypersurface.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="distinct-root count of a polynomial in x")
    p.add_argument("poly")
    p.add_argument("--method", choices=["all", "gcd", "subdisc", "order", "tval"], default="all")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("generic", help="generic discriminant or subdiscriminants")
    p.add_argument("n", type=int)
    p.add_argument("what", choices=["discriminant", "subdiscriminants"])
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_generic)

    p = sub.add_parser("sample", help="sample points of a coincident root locus")
    p.add_argument("partition", help="comma-separated parts, e.g. 2,1,1")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("verify", help="seeded cross-method agreement suite")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--trials", type=int, default=25)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--no-elapsed", action="store_true", help="omit wall time for byte-stable output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("surface", help="CSV samples of D on a coefficient grid")
    p.add_argument("--degree", type=int, choices=[3, 4], required=True)
    p.add_argument("--resolution", type=int, default=DEFAULT_RESOLUTION)
    p.add_argument("--out", default="-")
    p.add_argument("--range", action="append", default=[], help="LO:HI or a_i=LO:HI")
    p.add_argument("--fix", action="append", default=[], help="a_i=VALUE (degree 4 only)")
    p.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_surface)

    p = sub.add_parser("conjecture", help="smallest s with D_k^s in the derivative ideal")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s-max", type=int, default=4)
    p.add_argument("--allow-slow", action="store_true")
    p.set_defaults(func=cmd_conjecture)
    return parser


def main(argv=None, out=None, err=None):
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out, err)
    except (UsageError, ParseError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
