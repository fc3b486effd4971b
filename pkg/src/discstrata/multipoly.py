"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is a mapping from exponent tuples to nonzero coefficients.
Variable names travel with the polynomial; two polynomials can only be
combined when their names agree.

Canonical term order is graded lexicographic with the highest-index
variable most significant, so the generic cubic discriminant prints as::

    -4*a_2^3*a_0 + a_2^2*a_1^2 + 18*a_2*a_1*a_0 - 4*a_1^3 - 27*a_0^2
"""

import heapq
import math
from fractions import Fraction
from math import comb

from .rational import Scalar, as_rational, format_rational, normalize, rdiv

__all__ = [
    "MultiPoly",
    "coefficient_names",
    "arith",
    "partial_derivative",
    "evaluate",
    "taylor_shift",
    "order_of",
    "exact_quotient",
    "canonical_key",
]


def coefficient_names(n, prefix="a"):
    return tuple(f"{prefix}_{i}" for i in range(n))


def canonical_key(mon):
    """Sort key for the canonical order (larger key = earlier in text)."""
    return (sum(mon), mon[::-1])


def _neg_key(mon):
    return (-sum(mon), tuple(-e for e in reversed(mon)))


def _add_into(acc, mon, c):
    new = acc.get(mon, 0) + c
    if new:
        acc[mon] = new
    else:
        acc.pop(mon, None)


class MultiPoly:
    """Immutable sparse polynomial over Q.

    >>> a0, a1 = MultiPoly.variables(2)
    >>> str((a0 + a1) * (a0 - a1))
    '-a_1^2 + a_0^2'
    """

    __slots__ = ("names", "terms", "_hash")

    def __init__(self, terms=None, names=None):
        if names is None:
            raise ValueError("variable names are required")
        self.names = tuple(names)
        arity = len(self.names)
        clean = {}
        for mon, c in (terms or {}).items():
            mon = tuple(mon)
            if len(mon) != arity:
                raise ValueError(f"monomial {mon} does not match arity {arity}")
            if any(e < 0 for e in mon):
                raise ValueError(f"negative exponent in {mon}")
            c = as_rational(c)
            if c:
                _add_into(clean, mon, c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms, names):
        # trusted constructor: terms already canonical
        obj = cls.__new__(cls)
        obj.names = names
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c, names):
        names = tuple(names)
        c = as_rational(c)
        return cls._raw({(0,) * len(names): c} if c else {}, names)

    @classmethod
    def zero(cls, names):
        return cls._raw({}, tuple(names))

    @classmethod
    def variable(cls, index, names):
        names = tuple(names)
        if not 0 <= index < len(names):
            raise IndexError(f"variable index {index} out of range")
        mon = tuple(1 if i == index else 0 for i in range(len(names)))
        return cls._raw({mon: 1}, names)

    @classmethod
    def variables(cls, n, prefix="a"):
        names = coefficient_names(n, prefix)
        return tuple(cls.variable(i, names) for i in range(n))

    @property
    def arity(self):
        return len(self.names)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return all(not any(m) for m in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.arity, 0)

    def total_degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def min_degree(self):
        """Smallest total degree of a term; ``math.inf`` for zero."""
        return min((sum(m) for m in self.terms), default=math.inf)

    def coefficient(self, mon):
        return self.terms.get(tuple(mon), 0)

    def sorted_terms(self):
        """(monomial, coefficient) pairs in canonical descending order."""
        return sorted(self.terms.items(), key=lambda t: canonical_key(t[0]), reverse=True)

    def rename(self, names):
        names = tuple(names)
        if len(names) != self.arity:
            raise ValueError("rename must preserve arity")
        return MultiPoly._raw(self.terms, names)

    # arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.names != self.names:
                raise ValueError("incompatible rings")
            return other
        try:
            return MultiPoly.constant(other, self.names)
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self.terms)
        for mon, c in other.terms.items():
            _add_into(acc, mon, c)
        return MultiPoly._raw(acc, self.names)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({m: -c for m, c in self.terms.items()}, self.names)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self.terms)
        for mon, c in other.terms.items():
            _add_into(acc, mon, -c)
        return MultiPoly._raw(acc, self.names)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other.terms) > len(self.terms):
            small, big = self.terms, other.terms
        else:
            small, big = other.terms, self.terms
        acc = {}
        for m1, c1 in small.items():
            for m2, c2 in big.items():
                mon = tuple(x + y for x, y in zip(m1, m2))
                _add_into(acc, mon, c1 * c2)
        return MultiPoly._raw({m: normalize(c) for m, c in acc.items()}, self.names)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MultiPoly.constant(1, self.names)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c):
        c = as_rational(c)
        if not c:
            return MultiPoly.zero(self.names)
        return MultiPoly._raw({m: normalize(v * c) for m, v in self.terms.items()}, self.names)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.names == other.names and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == MultiPoly.constant(other, self.names).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.names, frozenset(self.terms.items())))
        return self._hash

    # calculus and evaluation --------------------------------------------

    def diff(self, index):
        return partial_derivative(self, index)

    def __call__(self, *point):
        return evaluate(self, point)

    # text ----------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for mon, c in self.sorted_terms():
            factors = []
            for i in reversed(range(self.arity)):
                e = mon[i]
                if e == 1:
                    factors.append(self.names[i])
                elif e > 1:
                    factors.append(f"{self.names[i]}^{e}")
            mag = format_rational(abs(c))
            if factors:
                body = "*".join(factors if mag == "1" else [mag] + factors)
            else:
                body = mag
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(pieces)

    def __repr__(self):
        return f"MultiPoly({str(self)!r}, names={self.names!r})"


def arith(p, q, op):
    """Apply ``op`` in {"add", "sub", "mul"} to two polynomials of one ring."""
    if p.names != q.names:
        raise ValueError("incompatible rings")
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def partial_derivative(p, var_index):
    if not 0 <= var_index < p.arity:
        raise IndexError(f"variable index {var_index} out of range for arity {p.arity}")
    acc = {}
    for mon, c in p.terms.items():
        e = mon[var_index]
        if e:
            new = mon[:var_index] + (e - 1,) + mon[var_index + 1:]
            acc[new] = c * e
    return MultiPoly._raw(acc, p.names)


def evaluate(p, point):
    point = [as_rational(v) for v in point]
    if len(point) != p.arity:
        raise ValueError(f"point has length {len(point)}, expected {p.arity}")
    powers = [[1] for _ in point]
    total = 0
    for mon, c in p.terms.items():
        term = c
        for i, e in enumerate(mon):
            if e:
                table = powers[i]
                while len(table) <= e:
                    table.append(table[-1] * point[i])
                term = term * table[e]
        total += term
    return normalize(total) if isinstance(total, Fraction) else total


def taylor_shift(p, gamma, names=None):
    """Return q with q(u) = p(gamma + u), in fresh variables u_0, u_1, ..."""
    gamma = [as_rational(v) for v in gamma]
    if len(gamma) != p.arity:
        raise ValueError(f"shift vector has length {len(gamma)}, expected {p.arity}")
    names = tuple(names) if names is not None else coefficient_names(p.arity, "u")
    terms = dict(p.terms)
    for i, g in enumerate(gamma):
        if not g:
            continue
        gpow = [1]
        acc = {}
        for mon, c in terms.items():
            e = mon[i]
            while len(gpow) <= e:
                gpow.append(gpow[-1] * g)
            for j in range(e + 1):
                new = mon[:i] + (j,) + mon[i + 1:]
                _add_into(acc, new, c * comb(e, j) * gpow[e - j])
        terms = {m: normalize(c) for m, c in acc.items()}
    return MultiPoly._raw(terms, names)


def order_of(p, gamma):
    """Order of p at gamma: least total degree in the Taylor expansion.

    Returns ``math.inf`` for the zero polynomial.
    """
    return taylor_shift(p, gamma).min_degree()


def exact_quotient(p, q):
    """p / q when q divides p exactly; ValueError otherwise."""
    if p.names != q.names:
        raise ValueError("incompatible rings")
    if not q.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    if not p.terms:
        return p
    if len(q.terms) == 1:
        (qm, qc), = q.terms.items()
        out = {}
        for mon, c in p.terms.items():
            d = tuple(a - b for a, b in zip(mon, qm))
            if min(d) < 0:
                raise ValueError("polynomial division is not exact")
            out[d] = rdiv(c, qc)
        return MultiPoly._raw(out, p.names)

    lead = max(q.terms, key=canonical_key)
    lc = q.terms[lead]
    rest = [(m, c) for m, c in q.terms.items() if m != lead]
    rem = dict(p.terms)
    heap = [(_neg_key(m), m) for m in rem]
    heapq.heapify(heap)
    quot = {}
    while rem:
        _, mon = heapq.heappop(heap)
        c = rem.pop(mon, None)
        if c is None:
            continue
        d = tuple(a - b for a, b in zip(mon, lead))
        if min(d) < 0:
            raise ValueError("polynomial division is not exact")
        f = rdiv(c, lc)
        quot[d] = f
        for m2, c2 in rest:
            t = tuple(a + b for a, b in zip(m2, d))
            old = rem.get(t)
            if old is None:
                rem[t] = -f * c2
                heapq.heappush(heap, (_neg_key(t), t))
            else:
                new = old - f * c2
                if new:
                    rem[t] = new
                else:
                    del rem[t]
    return MultiPoly._raw({m: normalize(c) for m, c in quot.items()}, p.names)
