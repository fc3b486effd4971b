"""Sylvester matrices, resultants, subdiscriminants and gcd machinery.

Throughout, ``F = x^n + a_{n-1} x^{n-1} + ... + a_0`` is the generic monic
polynomial of degree n over the coefficient variables ``a_0 .. a_{n-1}``.
The leading coefficient is fixed to 1.
"""

from dataclasses import dataclass

from ._cache import KeyedCache
from .linalg import PolyMatrix, bareiss_det, determinant, rational_det
from .multipoly import MultiPoly, coefficient_names, exact_quotient
from .rational import as_rational, rdiv
from .unipoly import UniPoly

__all__ = [
    "generic_coefficients",
    "sylvester_f_fprime",
    "subdiscriminant_matrix",
    "subdiscriminant",
    "subdiscriminant_at",
    "discriminant",
    "sylvester_matrix",
    "resultant",
    "resultant_euclid",
    "gcd",
    "gcd_and_cofactors",
    "subresultant_prs",
    "subresultant_gcd",
    "SquarefreeDecomposition",
    "squarefree_decomposition",
    "distinct_root_count",
]

_subdisc_cache = KeyedCache()


def generic_coefficients(n):
    """Coefficients of F, low to high: a_0, ..., a_{n-1}, 1."""
    names = coefficient_names(n)
    return [MultiPoly.variable(i, names) for i in range(n)] + [MultiPoly.constant(1, names)]


def _derivative_coeffs(coeffs):
    return [coeffs[i] * i for i in range(1, len(coeffs))]


def _truncated_sylvester(f, fp, k, zero):
    """Rows of the k-th subdiscriminant matrix; f, fp given low to high."""
    n = len(f) - 1
    width = 2 * n - 1 - 2 * k
    fh, fph = f[::-1], fp[::-1]
    rows = []
    for r in range(n - 1 - k):
        rows.append([fh[c - r] if 0 <= c - r <= n else zero for c in range(width)])
    for r in range(n - k):
        rows.append([fph[c - r] if 0 <= c - r <= n - 1 else zero for c in range(width)])
    return rows


def _check_degree(n):
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"degree must be an integer >= 2, got {n!r}")


def subdiscriminant_matrix(n, k):
    """Truncated Sylvester matrix of F and F' whose signed determinant is D_k."""
    _check_degree(n)
    if not 0 <= k <= n - 1:
        raise ValueError(f"subdiscriminant index k={k} out of range 0..{n - 1}")
    f = generic_coefficients(n)
    names = f[0].names
    rows = _truncated_sylvester(f, _derivative_coeffs(f), k, MultiPoly.zero(names))
    return PolyMatrix.from_rows(rows, names)


def sylvester_f_fprime(n):
    """The (2n-1)x(2n-1) Sylvester matrix of F and F'."""
    return subdiscriminant_matrix(n, 0)


def _subdisc_sign(n, k):
    return -1 if ((n - k) * (n - k - 1) // 2) % 2 else 1


def subdiscriminant(n, k):
    """D_k as a polynomial in a_0..a_{n-1}; cached per (n, k)."""
    _check_degree(n)
    if not 0 <= k <= n - 1:
        raise ValueError(f"subdiscriminant index k={k} out of range 0..{n - 1}")

    def compute():
        return determinant(subdiscriminant_matrix(n, k)).scale(_subdisc_sign(n, k))

    return _subdisc_cache.get((n, k), compute)


def discriminant(n):
    """The generic discriminant D = D_0 of the monic degree-n polynomial."""
    return subdiscriminant(n, 0)


def subdiscriminant_at(coords, k):
    """D_k evaluated at the coefficient point ``coords`` (gamma_0..gamma_{n-1}).

    Substitutes first and takes a rational determinant, which equals the
    value of the symbolic D_k without building it.
    """
    f = [as_rational(c) for c in coords] + [1]
    n = len(f) - 1
    _check_degree(n)
    if not 0 <= k <= n - 1:
        raise ValueError(f"subdiscriminant index k={k} out of range 0..{n - 1}")
    rows = _truncated_sylvester(f, _derivative_coeffs(f), k, 0)
    return _subdisc_sign(n, k) * rational_det(rows)


# resultants -------------------------------------------------------------

def _coeff_list(p):
    cs = list(p.coeffs) if isinstance(p, UniPoly) else list(p)
    while cs and not cs[-1]:
        cs.pop()
    return cs


def sylvester_matrix(p, q):
    """Classical Sylvester matrix (deg q rows of p, then deg p rows of q)."""
    pc, qc = _coeff_list(p), _coeff_list(q)
    dp, dq = len(pc) - 1, len(qc) - 1
    size = dp + dq
    zero = (pc[0] * 0) if pc else 0
    ph, qh = pc[::-1], qc[::-1]
    rows = []
    for r in range(dq):
        rows.append([ph[c - r] if 0 <= c - r <= dp else zero for c in range(size)])
    for r in range(dp):
        rows.append([qh[c - r] if 0 <= c - r <= dq else zero for c in range(size)])
    return rows


def resultant(p, q):
    """res_x(p, q) for p, q with coefficients in Q or in Q[t].

    Arguments are UniPoly objects or coefficient sequences (low to high)
    whose entries are rationals or MultiPoly objects of one ring.
    """
    pc, qc = _coeff_list(p), _coeff_list(q)
    if not pc or not qc:
        raise ValueError("resultant of a zero polynomial")
    names = next((c.names for c in pc + qc if isinstance(c, MultiPoly)), None)
    if names is not None:
        pc = [c if isinstance(c, MultiPoly) else MultiPoly.constant(c, names) for c in pc]
        qc = [c if isinstance(c, MultiPoly) else MultiPoly.constant(c, names) for c in qc]
    dp, dq = len(pc) - 1, len(qc) - 1
    if dp == 0 and dq == 0:
        return MultiPoly.constant(1, names) if names else 1
    if dp == 0:
        return pc[0] ** dq
    if dq == 0:
        return qc[0] ** dp
    rows = sylvester_matrix(pc, qc)
    if names is not None:
        return bareiss_det(rows, exact_quotient)
    return rational_det(rows)


def resultant_euclid(p, q):
    """res_x(p, q) over Q by the Euclidean recursion (cross-check path)."""
    if not p or not q:
        raise ValueError("resultant of a zero polynomial")
    sign_acc = 1
    a, b = p, q
    while True:
        m, n = a.degree, b.degree
        if n == 0:
            return sign_acc * b.lc() ** m
        r = a % b
        if not r:
            return 0
        # res(a, b) = (-1)^{mn} lc(b)^{m - deg r} res(b, r)
        if (m * n) % 2:
            sign_acc = -sign_acc
        sign_acc = sign_acc * b.lc() ** (m - r.degree)
        a, b = b, r


# gcd ----------------------------------------------------------------------

def gcd(p, q):
    """Monic gcd over Q by the Euclidean algorithm."""
    if not p and not q:
        raise ValueError("gcd of two zero polynomials")
    a, b = p, q
    while b:
        a, b = b, a % b
        if b:
            b = b.monic()
    return a.monic()


def gcd_and_cofactors(p, q):
    """(G, p/G, q/G) with G the monic gcd."""
    g = gcd(p, q)
    return g, p.exact_div(g), q.exact_div(g)


def _prem(a, b):
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b."""
    delta = a.degree - b.degree
    return (a * (b.lc() ** (delta + 1))) % b


def subresultant_prs(p, q):
    """Subresultant polynomial remainder sequence of p and q."""
    if not p or not q:
        raise ValueError("subresultant PRS of a zero polynomial")
    a, b = (p, q) if p.degree >= q.degree else (q, p)
    seq = [a, b]
    g = h = 1
    while b.degree > 0:
        delta = a.degree - b.degree
        r = _prem(a, b)
        if not r:
            break
        a, b = b, r.exact_div(UniPoly((g * h ** delta,)))
        g = a.lc()
        h = rdiv(g ** delta * h, h ** delta)
        seq.append(b)
    return seq


def subresultant_gcd(p, q):
    """Monic gcd read off the last nonzero subresultant PRS member."""
    if not p:
        return q.monic()
    if not q:
        return p.monic()
    return subresultant_prs(p, q)[-1].monic()


# square-free structure ------------------------------------------------------

@dataclass(frozen=True)
class SquarefreeDecomposition:
    """Monic, square-free, pairwise coprime factors with multiplicities."""

    factors: tuple  # of (UniPoly, int)

    def pattern(self):
        """Root multiplicities, largest first (one entry per distinct root)."""
        out = []
        for f, mult in self.factors:
            out.extend([mult] * f.degree)
        return tuple(sorted(out, reverse=True))

    def reconstruct(self):
        p = UniPoly((1,))
        for f, mult in self.factors:
            p = p * f ** mult
        return p

    def distinct_roots(self):
        return sum(f.degree for f, _ in self.factors)


def squarefree_decomposition(p):
    """Yun's algorithm over Q."""
    if not p or p.degree < 1:
        raise ValueError("square-free decomposition needs degree >= 1")
    if not p.is_monic():
        raise ValueError("square-free decomposition expects a monic polynomial")
    dp = p.derivative()
    a = gcd(p, dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.derivative()
    factors = []
    i = 1
    while b.degree > 0:
        ai = gcd(b, d)
        b = b.exact_div(ai)
        c = d.exact_div(ai)
        d = c - b.derivative()
        if ai.degree > 0:
            factors.append((ai, i))
        i += 1
    return SquarefreeDecomposition(tuple(factors))


def distinct_root_count(p):
    """n - deg gcd(p, p'): the number of distinct complex roots."""
    if not p or p.degree < 1:
        raise ValueError("distinct root count needs degree >= 1")
    if not p.is_monic():
        raise ValueError("distinct root count expects a monic polynomial")
    return p.degree - gcd(p, p.derivative()).degree
