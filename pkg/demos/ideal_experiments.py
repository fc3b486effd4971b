"""Membership experiments for powers of subdiscriminants.

For each (n, k) the derivative ideal is generated by all partials of D of
order at most n - k - 1. The table lists, for each D_j that vanishes on
the stratum, the least power landing in the ideal.
"""

from discstrata import (
    buchberger,
    derivative_ideal,
    ideals_equal,
    membership_ladder,
    subdiscriminant,
    subdiscriminant_ideal,
)

for n, k in [(3, 1), (4, 1), (4, 2)]:
    gb = buchberger(derivative_ideal(n, k))
    cells = []
    for j in range(n - k):
        ladder = membership_ladder(subdiscriminant(n, j), gb, 4)
        s = next((s for s, inside in ladder.items() if inside), None)
        cells.append(f"D_{j}: s={s}")
    print(f"n={n} k={k} basis size {len(gb.generators):>2}  " + ", ".join(cells))

same = ideals_equal(subdiscriminant_ideal(3, 1), derivative_ideal(3, 1))
print()
print(f"<D_0, D_1> equals the first-order derivative ideal for n=3: {same}")
