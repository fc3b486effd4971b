"""Fraction-free linear algebra over Q and over polynomial rings."""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .multipoly import MultiPoly, exact_quotient
from .rational import as_rational, rdiv

__all__ = [
    "PolyMatrix",
    "determinant",
    "bareiss_det",
    "cofactor_det",
    "rational_det",
    "rank_at_point",
]


@dataclass(frozen=True)
class PolyMatrix:
    rows: int
    cols: int
    entries: tuple  # row-major MultiPoly entries

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length must equal rows * cols")
        names = {e.names for e in self.entries}
        if len(names) > 1:
            raise ValueError("all entries must share one polynomial ring")

    @classmethod
    def from_rows(cls, rows, names):
        """Build from nested lists; scalar entries become constants."""
        names = tuple(names)
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        flat = []
        for r in rows:
            for e in r:
                flat.append(e if isinstance(e, MultiPoly) else MultiPoly.constant(e, names))
        return cls(len(rows), ncols, tuple(flat))

    @property
    def names(self):
        return self.entries[0].names if self.entries else ()

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r * self.cols + c]

    def row(self, r):
        return list(self.entries[r * self.cols:(r + 1) * self.cols])

    def to_rows(self):
        return [self.row(r) for r in range(self.rows)]

    def evaluate(self, point):
        """Numeric matrix obtained by substituting ``point``."""
        return [[e(*point) for e in self.row(r)] for r in range(self.rows)]


def bareiss_det(rows, exact_div):
    """Determinant by Bareiss elimination over an integral domain.

    ``rows`` is a square list of lists whose elements support ``*``, ``-``
    and truthiness; ``exact_div(a, b)`` must return the exact quotient.
    """
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = None
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return m[k][k] * 0  # zero of the entry ring
        piv = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                if mik:
                    val = piv * row_i[j] - mik * row_k[j]
                else:
                    val = piv * row_i[j]
                row_i[j] = exact_div(val, prev) if prev is not None else val
            row_i[k] = mik * 0
        prev = piv
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def cofactor_det(rows):
    """Laplace expansion along the sparsest row; exponential, for small sizes."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    best = min(range(n), key=lambda r: sum(1 for e in rows[r] if e))
    total = None
    for c, e in enumerate(rows[best]):
        if not e:
            continue
        minor = [row[:c] + row[c + 1:] for i, row in enumerate(rows) if i != best]
        term = e * cofactor_det(minor)
        if (best + c) % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return rows[0][0] * 0
    return total


def _poly_div(a, b):
    return exact_quotient(a, b)


def determinant(m, method="bareiss"):
    """Exact determinant of a square PolyMatrix, as a MultiPoly."""
    if m.rows != m.cols:
        raise ValueError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    names = m.names
    if m.rows == 0:
        return MultiPoly.constant(1, names)
    rows = m.to_rows()
    if method == "bareiss":
        det = bareiss_det(rows, _poly_div)
    elif method == "cofactor":
        det = cofactor_det(rows)
    else:
        raise ValueError(f"unknown determinant method {method!r}")
    return det if isinstance(det, MultiPoly) else MultiPoly.constant(det, names)


def _integer_rows(rows):
    out = []
    for r in rows:
        r = [as_rational(x) for x in r]
        den = lcm(*[x.denominator for x in r if type(x) is Fraction] or [1])
        out.append([int(x * den) for x in r])
    return out


def rational_det(rows):
    """Exact determinant of a square matrix of rationals."""
    rows = [[as_rational(x) for x in r] for r in rows]
    scale = 1
    for r in rows:
        scale *= lcm(*[x.denominator for x in r if type(x) is Fraction] or [1])
    det = bareiss_det(_integer_rows(rows), lambda a, b: a // b)
    return rdiv(det, scale)


def rank_at_point(rows):
    """Rank of a rational matrix by fraction-free elimination with pivoting."""
    m = _integer_rows(rows)
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    prev = 1
    for c in range(ncols):
        if rank == nrows:
            break
        candidates = [i for i in range(rank, nrows) if m[i][c]]
        if not candidates:
            continue
        p = max(candidates, key=lambda i: abs(m[i][c]))
        m[rank], m[p] = m[p], m[rank]
        piv = m[rank][c]
        for i in range(rank + 1, nrows):
            mic = m[i][c]
            row_i, row_r = m[i], m[rank]
            for j in range(c + 1, ncols):
                num = piv * row_i[j] - mic * row_r[j]
                q, r = divmod(num, prev)
                assert r == 0, "fraction-free step must divide exactly"
                row_i[j] = q
            row_i[c] = 0
        prev = piv
        rank += 1
    return rank

