"""Walk through the quartic strata with the four classifiers.

Run with ``python demos/quartic_strata.py``.
"""

from discstrata import (
    CoefficientPoint,
    discriminant,
    hypersurface_singularity_test,
    parse_polynomial,
    stratum_report,
    subdiscriminant,
)

D = discriminant(4)
print(f"D has {len(D.terms)} terms:")
print(" ", D)
print()

for k in range(4):
    print(f"D_{k} = {subdiscriminant(4, k)}")
print()

# one representative per stratum, from four distinct roots down to one
samples = [
    "(x-1)(x-2)(x-3)(x-4)",
    "(x-1)^2(x-2)(x-3)",
    "(x-1)^3(x-2)",
    "(x-1)^4",
]
print(f"{'polynomial':<24} m  ord D  singular")
for text in samples:
    gamma = CoefficientPoint.from_poly(parse_polynomial(text))
    r = stratum_report(gamma)
    assert r.consistent
    print(f"{text:<24} {r.m_gcd}  {r.ord_D:>5}  {r.hypersurface_singular}")
print()

# three points on the hypersurface with increasingly degenerate root structure
for name, coords in [("P1", (5, 8, 2, 0)), ("P2", (4, 0, 4, 0)), ("P3", (0, 0, 0, 0))]:
    r = stratum_report(coords)
    kind = "singular" if hypersurface_singularity_test(coords) else "smooth"
    print(f"{name} = {coords}: m = {r.m_gcd}, ord D = {r.ord_D}, {kind} point of V(D)")
