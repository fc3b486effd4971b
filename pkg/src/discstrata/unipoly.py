"""Dense univariate polynomials over Q, with Euclidean machinery."""

from fractions import Fraction

from .rational import as_rational, format_rational, normalize, rdiv

__all__ = ["UniPoly", "X"]


class UniPoly:
    """Polynomial in x stored as coefficients, index i holding x^i.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_rational(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, cs):
        cs = list(cs)
        while cs and not cs[-1]:
            cs.pop()
        obj = cls.__new__(cls)
        obj.coeffs = tuple(normalize(c) if type(c) is Fraction else c for c in cs)
        return obj

    @classmethod
    def from_roots(cls, roots):
        """Monic product of (x - r) over the given roots (with repetition)."""
        p = cls((1,))
        for r in roots:
            p = p * cls((-as_rational(r), 1))
        return p

    @classmethod
    def monomial(cls, degree, c=1):
        return cls._raw([0] * degree + [as_rational(c)])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self):
        if not self.coeffs:
            raise ValueError("cannot normalize the zero polynomial")
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        return UniPoly._raw([rdiv(c, lc) for c in self.coeffs])

    def derivative(self):
        return UniPoly._raw([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        x = as_rational(x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return normalize(acc) if type(acc) is Fraction else acc

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return UniPoly._raw([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UniPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative integer")
        result, base = UniPoly((1,)), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.coeffs[-1]
        if len(rem) - 1 < dq:
            return UniPoly(), self
        quot = [0] * (len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if not c:
                continue
            f = rdiv(c, lc)
            quot[i - dq] = f
            for j, y in enumerate(other.coeffs):
                rem[i - dq + j] -= f * y
        return UniPoly._raw(quot), UniPoly._raw(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if r:
            raise ValueError("polynomial division is not exact")
        return q

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def valuation(self):
        """Multiplicity of 0 as a root; ``None`` for the zero polynomial."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"UniPoly({render(self)!r})"


def render(p, var="x"):
    """Text form accepted back by the expression parser."""
    if not p.coeffs:
        return "0"
    pieces = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if not c:
            continue
        mag = format_rational(abs(c))
        if i == 0:
            body = mag
        else:
            power = var if i == 1 else f"{var}^{i}"
            body = power if mag == "1" else f"{mag}*{power}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(pieces)


X = UniPoly((0, 1))
