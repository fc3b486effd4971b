"""Stratification of the discriminant hypersurface by distinct-root count.

Four independent classifiers return m, the number of distinct complex roots
of F_gamma = x^n + gamma_{n-1} x^{n-1} + ... + gamma_0:

* ``classify_by_gcd``: n - deg gcd(F, F'). Ground truth.
* ``classify_by_subdiscriminants``: first nonvanishing D_j at gamma gives m = n - j.
* ``classify_by_order``: m = n - ord D(gamma).
* ``t_valuation_constant_shift``: valuation at t=0 of res_x(F + t, F') is n - m.
"""

import json
import random
from dataclasses import asdict, dataclass
from fractions import Fraction

from .multipoly import MultiPoly, evaluate, order_of, partial_derivative
from .rational import as_rational, format_rational
from .resultants import (
    discriminant,
    distinct_root_count,
    gcd,
    resultant,
    squarefree_decomposition,
    subdiscriminant_at,
)
from .unipoly import UniPoly

__all__ = [
    "MAX_SYMBOLIC_DEGREE",
    "CoefficientPoint",
    "Partition",
    "partitions",
    "StratumReport",
    "classify_by_gcd",
    "classify_by_subdiscriminants",
    "classify_by_order",
    "t_valuation_constant_shift",
    "t_valuation_monomial_shift",
    "shifted_resultant",
    "coincident_point",
    "sample_coincident_locus",
    "multiplicity_pattern",
    "coincident_locus_membership",
    "hypersurface_singularity_test",
    "stratum_report",
]

MAX_SYMBOLIC_DEGREE = 7

ROOT_NUMERATOR_RANGE = (-50, 50)
ROOT_DENOMINATORS = (1, 2, 3)


@dataclass(frozen=True)
class CoefficientPoint:
    """Coordinates (gamma_0, ..., gamma_{n-1}) of a monic degree-n polynomial."""

    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(as_rational(c) for c in self.coords))
        if not self.coords:
            raise ValueError("a coefficient point needs degree >= 1")

    @classmethod
    def from_poly(cls, p):
        if not p.is_monic():
            raise ValueError("polynomial must be monic")
        return cls(p.coeffs[:-1])

    @property
    def n(self):
        return len(self.coords)

    def poly(self):
        return UniPoly(self.coords + (1,))

    def to_json(self):
        return [format_rational(c) for c in self.coords]

    def __str__(self):
        return "(" + ", ".join(format_rational(c) for c in self.coords) + ")"


class Partition(tuple):
    """Weakly decreasing tuple of positive parts."""

    def __new__(cls, parts):
        parts = sorted((int(p) for p in parts), reverse=True)
        if not parts or parts[-1] < 1:
            raise ValueError(f"invalid partition {parts!r}")
        return super().__new__(cls, parts)

    @property
    def n(self):
        return sum(self)

    def __repr__(self):
        return f"Partition({tuple(self)!r})"


def partitions(n):
    """All partitions of n in reverse lexicographic order, (n) first."""
    def gen(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return [Partition(p) for p in gen(n, n)]


@dataclass(frozen=True)
class StratumReport:
    n: int
    m_gcd: int
    m_subdisc: int
    m_order: int
    m_tval: int
    ord_D: int
    d_gcd: int
    on_hypersurface: bool
    hypersurface_singular: bool
    consistent: bool

    def to_dict(self):
        return asdict(self)

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=False)


def _point(gamma):
    return gamma if isinstance(gamma, CoefficientPoint) else CoefficientPoint(gamma)


def _require_symbolic(n):
    if not 2 <= n <= MAX_SYMBOLIC_DEGREE:
        raise ValueError(
            f"degree {n} is outside the symbolic range 2..{MAX_SYMBOLIC_DEGREE}; "
            "use the t-valuation classifier instead"
        )


# classifiers ------------------------------------------------------------------

def classify_by_gcd(gamma):
    return distinct_root_count(_point(gamma).poly())


def classify_by_subdiscriminants(gamma):
    gamma = _point(gamma)
    n = gamma.n
    for j in range(n):
        if subdiscriminant_at(gamma.coords, j):
            return n - j
    raise AssertionError("D_{n-1} = n can never vanish")


def classify_by_order(gamma):
    gamma = _point(gamma)
    _require_symbolic(gamma.n)
    return gamma.n - order_of(discriminant(gamma.n), gamma.coords)


def _t_ring():
    return ("t",)


def shifted_resultant(gamma, s=0):
    """R_s(t) = res_x(F + t x^s, F' + s t x^(s-1)) as a MultiPoly in t.

    s = 0 gives the constant shift res_x(F + t, F').
    """
    gamma = _point(gamma)
    n = gamma.n
    names = _t_ring()
    t = MultiPoly.variable(0, names)
    f = [MultiPoly.constant(c, names) for c in gamma.coords] + [MultiPoly.constant(1, names)]
    f[s] = f[s] + t
    fp = [f[i] * i for i in range(1, n + 1)]
    return resultant(f, fp)


def _valuation(r):
    if r.is_zero():
        raise ArithmeticError("shifted resultant vanished identically")
    return r.min_degree()


def t_valuation_constant_shift(gamma):
    """Valuation at t = 0 of res_x(F_gamma + t, F'_gamma); equals n - m."""
    return _valuation(shifted_resultant(gamma, 0))


def t_valuation_monomial_shift(gamma, s):
    """Valuation at t = 0 of res_x(F + t x^s, F' + s t x^(s-1)).

    At least n - m, with equality iff 0 is not a multiple root of F_gamma.
    When 0 is a multiple root and s >= 2, F + t x^s keeps that repeated root
    for every t, the resultant is identically zero and ``math.inf`` is returned.
    """
    gamma = _point(gamma)
    if not 1 <= s <= gamma.n - 1:
        raise ValueError(f"shift exponent s={s} out of range 1..{gamma.n - 1}")
    return shifted_resultant(gamma, s).min_degree()


# coincident root loci ------------------------------------------------------------

def coincident_point(mu, roots):
    """Coefficient point of prod (x - roots[i])^mu[i]."""
    mu = Partition(mu)
    if len(roots) != len(mu):
        raise ValueError("need one root per part")
    p = UniPoly((1,))
    for r, e in zip(roots, mu):
        p = p * UniPoly((-as_rational(r), 1)) ** e
    return CoefficientPoint.from_poly(p)


def sample_roots(count, rng):
    """``count`` pairwise distinct bounded rationals."""
    lo, hi = ROOT_NUMERATOR_RANGE
    seen = []
    while len(seen) < count:
        r = as_rational(Fraction(rng.randint(lo, hi), rng.choice(ROOT_DENOMINATORS)))
        if r not in seen:
            seen.append(r)
    return seen


def sample_coincident_locus(mu, seed):
    """Deterministic point of C_mu with multiplicity pattern exactly mu."""
    mu = Partition(mu)
    rng = random.Random(seed)
    return coincident_point(mu, sample_roots(len(mu), rng))


def multiplicity_pattern(gamma):
    """Root multiplicities of F_gamma, largest first."""
    return squarefree_decomposition(_point(gamma).poly()).pattern()


def coincident_locus_membership(pattern, mu):
    """True iff the parts of mu can be grouped so the group sums are ``pattern``.

    That is exactly the condition for a polynomial with root multiplicities
    ``pattern`` to lie in C_mu.
    """
    pattern = sorted(pattern, reverse=True)
    parts = sorted(mu, reverse=True)
    if sum(pattern) != sum(parts):
        raise ValueError("pattern and partition sum to different n")
    if len(parts) < len(pattern):
        return False
    remaining = list(pattern)

    def place(i):
        if i == len(parts):
            return all(r == 0 for r in remaining)
        tried = set()
        for g, r in enumerate(remaining):
            if r >= parts[i] and r not in tried:
                tried.add(r)
                remaining[g] -= parts[i]
                if place(i + 1):
                    return True
                remaining[g] += parts[i]
        return False

    return place(0)


# hypersurface ---------------------------------------------------------------

def hypersurface_singularity_test(gamma):
    """True iff every first partial of D vanishes at gamma (D(gamma) = 0 required)."""
    gamma = _point(gamma)
    _require_symbolic(gamma.n)
    D = discriminant(gamma.n)
    if evaluate(D, gamma.coords):
        raise ValueError("not on hypersurface")
    return all(
        evaluate(partial_derivative(D, i), gamma.coords) == 0 for i in range(gamma.n)
    )


def stratum_report(gamma):
    """Run all four classifiers and collect them into a StratumReport."""
    gamma = _point(gamma)
    n = gamma.n
    if n < 2:
        raise ValueError("stratum report needs degree >= 2")
    f = gamma.poly()
    d = gcd(f, f.derivative()).degree
    m_gcd = n - d
    m_subdisc = classify_by_subdiscriminants(gamma)
    ord_d = order_of(discriminant(_checked(n)), gamma.coords)
    m_order = n - ord_d
    m_tval = n - t_valuation_constant_shift(gamma)
    on_hyp = m_gcd <= n - 1
    # the singularity test needs D(gamma) = 0; off the hypersurface it is False
    singular = hypersurface_singularity_test(gamma) if ord_d >= 1 else False
    consistent = m_gcd == m_subdisc == m_order == m_tval
    return StratumReport(
        n=n,
        m_gcd=m_gcd,
        m_subdisc=m_subdisc,
        m_order=m_order,
        m_tval=m_tval,
        ord_D=ord_d,
        d_gcd=d,
        on_hypersurface=on_hyp,
        hypersurface_singular=singular,
        consistent=consistent,
    )


def _checked(n):
    _require_symbolic(n)
    return n


def refinements_by_split(mu):
    """Partitions obtained from mu by splitting a single part in two."""
    mu = Partition(mu)
    out = set()
    for i, part in enumerate(mu):
        for a in range(1, part // 2 + 1):
            rest = mu[:i] + mu[i + 1:]
            out.add(Partition(rest + (a, part - a)))
    return sorted(out, reverse=True)

