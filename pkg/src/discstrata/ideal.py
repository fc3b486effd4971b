"""A small Buchberger engine over Q for ideal-membership experiments.

The instances of interest are tiny (at most 4 variables, degree at most 6),
so this favours a plain, checkable implementation: normal selection
strategy, Buchberger's coprime-leading-monomial and chain criteria, then a
final inter-reduction to the reduced basis.
"""

import heapq
from dataclasses import dataclass

from .multipoly import MultiPoly, partial_derivative
from .rational import normalize, rdiv
from .resultants import discriminant, subdiscriminant

__all__ = [
    "MonomialOrder",
    "GREVLEX",
    "LEX",
    "GroebnerBasis",
    "buchberger",
    "normal_form",
    "membership_ladder",
    "smallest_power_in_ideal",
    "ideals_equal",
    "derivative_ideal",
    "subdiscriminant_ideal",
    "conjecture_instance",
    "CONJECTURE_WHITELIST",
]

CONJECTURE_WHITELIST = frozenset({(3, 1), (4, 1)})


@dataclass(frozen=True)
class MonomialOrder:
    """Graded reverse lex or lex; ``ranking`` lists variables smallest first."""

    tag: str = "grevlex"
    ranking: tuple | None = None

    def __post_init__(self):
        if self.tag not in ("grevlex", "lex"):
            raise ValueError(f"unknown monomial order {self.tag!r}")

    def key(self, mon):
        """Flat integer tuple; larger means larger monomial."""
        e = mon if self.ranking is None else tuple(mon[v] for v in self.ranking)
        if self.tag == "grevlex":
            return (sum(e),) + tuple(-x for x in e)
        return e[::-1]


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


class _Poly:
    """Working form: terms dict plus cached leading monomial under an order."""

    __slots__ = ("terms", "lm", "lc")

    def __init__(self, terms, key):
        self.terms = terms
        self.lm = max(terms, key=key)
        self.lc = terms[self.lm]

    def monic(self, key):
        if self.lc == 1:
            return self
        lc = self.lc
        return _Poly({m: rdiv(c, lc) for m, c in self.terms.items()}, key)


def _reduce(terms, basis, key):
    """Full reduction of ``terms`` modulo the working basis; returns a dict."""
    p = dict(terms)
    heap = [(tuple(-k for k in key(m)), m) for m in p]
    heapq.heapify(heap)
    rem = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = p.pop(m, None)
        if c is None:
            continue
        for g in basis:
            if _divides(g.lm, m):
                f = rdiv(c, g.lc)
                shift = _sub(m, g.lm)
                for gm, gc in g.terms.items():
                    if gm == g.lm:
                        continue
                    t = _add(gm, shift)
                    old = p.get(t)
                    if old is None:
                        p[t] = normalize(-f * gc)
                        heapq.heappush(heap, (tuple(-k for k in key(t)), t))
                    else:
                        new = old - f * gc
                        if new:
                            p[t] = normalize(new)
                        else:
                            del p[t]
                break
        else:
            rem[m] = c
    return rem


def _spoly(f, g):
    lcm = _lcm(f.lm, g.lm)
    sf, sg = _sub(lcm, f.lm), _sub(lcm, g.lm)
    out = {}
    for m, c in f.terms.items():
        out[_add(m, sf)] = rdiv(c, f.lc)
    for m, c in g.terms.items():
        t = _add(m, sg)
        new = out.get(t, 0) - rdiv(c, g.lc)
        if new:
            out[t] = normalize(new)
        else:
            out.pop(t, None)
    return out


@dataclass(frozen=True)
class GroebnerBasis:
    generators: tuple  # MultiPoly, monic leading coefficients
    order: MonomialOrder

    @property
    def names(self):
        return self.generators[0].names if self.generators else None

    def _working(self):
        key = self.order.key
        return [_Poly(g.terms, key) for g in self.generators]

    def reduce(self, p):
        return normal_form(p, self)

    def contains(self, p):
        return normal_form(p, self).is_zero()

    def leading_monomials(self):
        key = self.order.key
        return [max(g.terms, key=key) for g in self.generators]

    def is_groebner(self):
        """Buchberger criterion: every S-polynomial reduces to zero."""
        work = self._working()
        key = self.order.key
        for i in range(len(work)):
            for j in range(i + 1, len(work)):
                if _reduce(_spoly(work[i], work[j]), work, key):
                    return False
        return True

    def is_reduced(self):
        work = self._working()
        for i, g in enumerate(work):
            if g.lc != 1:
                return False
            for j, h in enumerate(work):
                if i != j and any(_divides(h.lm, m) for m in g.terms):
                    return False
        return True


def buchberger(gens, order=GREVLEX):
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    gens = list(gens)
    if not gens:
        raise ValueError("empty generator list")
    names = gens[0].names
    if any(g.names != names for g in gens):
        raise ValueError("incompatible rings")
    key = order.key
    basis = []
    for g in gens:
        if g.terms:
            basis.append(_Poly(dict(g.terms), key).monic(key))
    if not basis:
        return GroebnerBasis((), order)

    pairs = {(i, j) for j in range(len(basis)) for i in range(j)}

    def pair_key(ij):
        i, j = ij
        return key(_lcm(basis[i].lm, basis[j].lm)), ij

    while pairs:
        ij = min(pairs, key=pair_key)
        pairs.discard(ij)
        i, j = ij
        f, g = basis[i], basis[j]
        lcm = _lcm(f.lm, g.lm)
        if lcm == _add(f.lm, g.lm):
            continue  # coprime leading monomials
        if _chain_skip(i, j, lcm, basis, pairs):
            continue
        r = _reduce(_spoly(f, g), basis, key)
        if r:
            new = _Poly(r, key).monic(key)
            basis.append(new)
            k = len(basis) - 1
            pairs.update((a, k) for a in range(k))
    return GroebnerBasis(_interreduce(basis, key, names), order)


def _chain_skip(i, j, lcm, basis, pending):
    # skip (i, j) if some third element's leading monomial divides lcm and
    # both pairs with it are already handled
    for k, h in enumerate(basis):
        if k in (i, j) or not _divides(h.lm, lcm):
            continue
        ik = (min(i, k), max(i, k))
        jk = (min(j, k), max(j, k))
        if ik not in pending and jk not in pending:
            return True
    return False


def _interreduce(basis, key, names):
    # drop elements whose leading monomial is divisible by another's
    minimal = []
    for g in sorted(basis, key=lambda p: key(p.lm)):
        if not any(_divides(h.lm, g.lm) for h in minimal):
            minimal.append(g)
    reduced = []
    for idx, g in enumerate(minimal):
        others = [h for h in minimal if h is not g]
        tail = {m: c for m, c in g.terms.items() if m != g.lm}
        r = _reduce(tail, others, key)
        r[g.lm] = g.lc
        reduced.append(_Poly(r, key).monic(key))
    reduced.sort(key=lambda p: key(p.lm), reverse=True)
    return tuple(MultiPoly(p.terms, names) for p in reduced)


def normal_form(p, gb):
    """Remainder of p on complete division by the basis; zero iff p in the ideal."""
    if gb.generators and p.names != gb.names:
        raise ValueError("incompatible rings")
    rem = _reduce(p.terms, gb._working(), gb.order.key)
    return MultiPoly(rem, p.names)


def _as_basis(gens_or_gb, order=GREVLEX):
    if isinstance(gens_or_gb, GroebnerBasis):
        return gens_or_gb
    return buchberger(gens_or_gb, order)


def membership_ladder(p, gens_or_gb, s_max):
    """{s: p^s in ideal} for s = 1..s_max."""
    if s_max < 1:
        raise ValueError("s_max must be at least 1")
    gb = _as_basis(gens_or_gb)
    ladder = {}
    current = MultiPoly.constant(1, p.names)
    for s in range(1, s_max + 1):
        # p^s is congruent to p * NF(p^(s-1)) modulo the ideal
        current = normal_form(current * p, gb)
        ladder[s] = current.is_zero()
    return ladder


def smallest_power_in_ideal(p, gens, s_max):
    """Least s <= s_max with p^s in <gens>, or None."""
    ladder = membership_ladder(p, gens, s_max)
    return next((s for s, inside in ladder.items() if inside), None)


def ideals_equal(a, b, order=GREVLEX):
    """Equality of <a> and <b> by mutual reduction against Groebner bases."""
    gb_a, gb_b = buchberger(a, order), buchberger(b, order)
    return all(gb_b.contains(g) for g in a) and all(gb_a.contains(g) for g in b)


def derivative_ideal(n, k):
    """Generators {d_delta D : |delta| <= n - k - 1}, zeros and repeats dropped."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must lie in 1..{n - 1}")
    D = discriminant(n)
    level = {(0,) * n: D}
    found = dict(level)
    for _ in range(n - k - 1):
        nxt = {}
        for delta, poly in level.items():
            for i in range(n):
                d2 = delta[:i] + (delta[i] + 1,) + delta[i + 1:]
                if d2 not in found and d2 not in nxt:
                    nxt[d2] = partial_derivative(poly, i)
        found.update(nxt)
        level = nxt
    seen, out = set(), []
    for delta in sorted(found, key=lambda d: (sum(d), d)):
        g = found[delta]
        if g.terms and g not in seen:
            seen.add(g)
            out.append(g)
    return out


def subdiscriminant_ideal(n, k):
    """Generators {D_0, ..., D_{n-k-1}}."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must lie in 1..{n - 1}")
    return [subdiscriminant(n, j) for j in range(n - k)]


def conjecture_instance(n, k, s_max=None):
    """Smallest s with D_k^s in the derivative ideal, with the full ladder.

    D_k only vanishes on the common zero set when k <= n - k - 1; for larger
    k no power can lie in the ideal and the ladder is all False.
    """
    s_max = s_max if s_max is not None else k + 2
    gens = derivative_ideal(n, k)
    gb = buchberger(gens)
    p = subdiscriminant(n, k)
    ladder = membership_ladder(p, gb, s_max)
    smallest = next((s for s, inside in ladder.items() if inside), None)
    return {
        "n": n,
        "k": k,
        "s_max": s_max,
        "ladder": {str(s): v for s, v in ladder.items()},
        "smallest": smallest,
        "conjectured": k + 1,
        "matches": smallest == k + 1,
        "not_radical": smallest is not None and smallest >= 2,
        "vanishes_on_locus": k <= n - k - 1,
        "basis_size": len(gb.generators),
    }

