"""Helpers for exact rational scalars.

Scalars are plain ``int`` when integral and ``fractions.Fraction`` otherwise.
Keeping integers as ``int`` makes the integer-heavy generic computations
several times faster than carrying ``Fraction(k, 1)`` around.
"""

from fractions import Fraction
from numbers import Rational

__all__ = ["Scalar", "as_rational", "normalize", "rdiv", "format_rational"]

Scalar = int | Fraction


def normalize(x: Scalar) -> Scalar:
    """Collapse integral fractions to ``int``."""
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


def as_rational(x) -> Scalar:
    """Coerce an int, Fraction or ``"p/q"`` string to an exact scalar."""
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return normalize(x)
    if isinstance(x, Rational):
        return normalize(Fraction(x.numerator, x.denominator))
    if isinstance(x, str):
        return normalize(Fraction(x.strip()))
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def rdiv(a: Scalar, b: Scalar) -> Scalar:
    """Exact quotient a/b."""
    if type(a) is int and type(b) is int:
        if b == 0:
            raise ZeroDivisionError("division by zero")
        if a % b == 0:
            return a // b
        return Fraction(a, b)
    return normalize(Fraction(a) / b)


def format_rational(x: Scalar) -> str:
    """``"p/q"`` text, or ``"p"`` for integers."""
    x = normalize(x)
    if type(x) is int:
        return str(x)
    return f"{x.numerator}/{x.denominator}"
