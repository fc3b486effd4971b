"""Scalar-field export of D over rational coefficient grids.

Each row holds a grid point, the exact value of D there rendered as a
decimal, and the gcd-based distinct-root count m. The exact identity
D = 0 iff m <= n - 1 is checked on every row before anything is rendered.
"""

import csv
import io
import itertools
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction

from .multipoly import coefficient_names, evaluate
from .rational import as_rational
from .resultants import discriminant, distinct_root_count
from .unipoly import UniPoly

__all__ = ["SurfaceGrid", "SurfaceRow", "DEFAULT_RANGE", "DEFAULT_RESOLUTION",
           "DEFAULT_CAP", "DEFAULT_PRECISION", "format_decimal", "grid_rows", "write_csv"]

DEFAULT_RANGE = (-4, 4)
DEFAULT_RESOLUTION = 9
DEFAULT_CAP = 250_000
DEFAULT_PRECISION = 12


@dataclass(frozen=True)
class SurfaceGrid:
    """Rectangular rational grid over the free coefficients of a monic cubic or quartic.

    ``ranges`` maps a coefficient index to (lo, hi); missing free axes use
    DEFAULT_RANGE. ``fixed`` maps coefficient indices to slice values.
    """

    n: int
    resolution: int = DEFAULT_RESOLUTION
    ranges: dict = field(default_factory=dict)
    fixed: dict = field(default_factory=dict)
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        if self.n not in (3, 4):
            raise ValueError("surface export supports degree 3 or 4")
        if self.resolution < 2:
            raise ValueError("resolution must be at least 2")
        fixed = {int(i): as_rational(v) for i, v in self.fixed.items()}
        if self.n == 4 and not fixed:
            fixed = {3: 0}
        for i in fixed:
            if not 0 <= i < self.n:
                raise ValueError(f"fixed coefficient a_{i} out of range")
        if self.n == 3 and fixed:
            raise ValueError("degree 3 grids have no fixed coefficients")
        if self.n == 4 and len(fixed) != 1:
            raise ValueError("degree 4 grids fix exactly one coefficient")
        ranges = {}
        for i, (lo, hi) in self.ranges.items():
            i = int(i)
            if i in fixed or not 0 <= i < self.n:
                raise ValueError(f"a_{i} is not a free axis")
            lo, hi = as_rational(lo), as_rational(hi)
            if not lo < hi:
                raise ValueError(f"empty range for a_{i}: {lo} .. {hi}")
            ranges[i] = (lo, hi)
        object.__setattr__(self, "fixed", fixed)
        object.__setattr__(self, "ranges", ranges)
        if self.size > self.cap:
            raise ValueError(f"grid has {self.size} points, above the cap of {self.cap}")

    @property
    def free_axes(self):
        return [i for i in range(self.n) if i not in self.fixed]

    @property
    def size(self):
        return self.resolution ** len(self.free_axes)

    def axis_values(self, i):
        lo, hi = self.ranges.get(i, DEFAULT_RANGE)
        step = Fraction(hi - lo, self.resolution - 1)
        return [as_rational(lo + j * step) for j in range(self.resolution)]

    def points(self):
        """Grid points as coefficient tuples, first free axis varying slowest."""
        axes = self.free_axes
        for values in itertools.product(*(self.axis_values(i) for i in axes)):
            coords = dict(self.fixed)
            coords.update(zip(axes, values))
            yield tuple(coords[i] for i in range(self.n))

    def header(self):
        return coefficient_names(self.n) + ("D", "m")


@dataclass(frozen=True)
class SurfaceRow:
    coords: tuple
    D: object
    m: int


def grid_rows(grid):
    D = discriminant(grid.n)
    for coords in grid.points():
        value = evaluate(D, coords)
        m = distinct_root_count(UniPoly(coords + (1,)))
        if (value == 0) != (m <= grid.n - 1):
            raise ArithmeticError(f"D = {value} disagrees with m = {m} at {coords}")
        yield SurfaceRow(coords, value, m)


def format_decimal(x, precision=DEFAULT_PRECISION):
    """Round a rational to ``precision`` significant digits."""
    x = as_rational(x)
    if isinstance(x, int):
        d = Decimal(x)
        if len(d.as_tuple().digits) <= precision:
            return str(x)
        with localcontext() as ctx:
            ctx.prec = precision
            return str(+d)
    with localcontext() as ctx:
        ctx.prec = precision
        return str(Decimal(x.numerator) / Decimal(x.denominator))


def write_csv(grid, out=None, precision=DEFAULT_PRECISION):
    """Write the grid as CSV to a path or file object; returns the row count.

    With ``out=None`` the CSV text is returned instead.
    """
    if precision < 1:
        raise ValueError("precision must be positive")
    buffer = io.StringIO() if out is None else None
    target = buffer
    handle = None
    if out is not None:
        if hasattr(out, "write"):
            target = out
        else:
            handle = target = open(out, "w", newline="")
    try:
        writer = csv.writer(target, lineterminator="\n")
        writer.writerow(grid.header())
        count = 0
        for row in grid_rows(grid):
            writer.writerow([format_decimal(c, precision) for c in row.coords]
                            + [format_decimal(row.D, precision), row.m])
            count += 1
    finally:
        if handle is not None:
            handle.close()
    return buffer.getvalue() if buffer is not None else count
