"""Write the scalar fields behind the cubic hypersurface and the quartic slice a_3 = 0.

The CSV files can be fed to any isosurface or contour plotter; the zero
level set of the D column is the discriminant hypersurface.
"""

import sys
from collections import Counter
from pathlib import Path

from discstrata import SurfaceGrid, write_csv
from discstrata.surface import grid_rows

out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(".")
out_dir.mkdir(parents=True, exist_ok=True)

cubic = SurfaceGrid(3, resolution=17, ranges={0: (-4, 4), 1: (-4, 4), 2: (-4, 4)})
quartic = SurfaceGrid(4, resolution=17, fixed={3: 0})

for name, grid in [("cubic.csv", cubic), ("quartic_a3_0.csv", quartic)]:
    count = write_csv(grid, out_dir / name)
    by_m = Counter(row.m for row in grid_rows(grid))
    print(f"{name}: {count} rows, distinct-root counts {dict(sorted(by_m.items()))}")
