#!/usr/bin/env python3
"""Cone maps into matrix groups and their certification.

The story in three acts: the naive map that places signed entries in one
matrix fails to separate disjoint cones; splitting the upper and lower
parts into a product fixes it; the harness then certifies divergence and
properness on every disjoint pair of simplices with exact arithmetic.
"""

from fractions import Fraction

from obstructor import (
    ConePoint,
    ExactMatrix,
    divergence_suite,
    divergence_test,
    fibration_compose,
    heisenberg_map,
    properness_test,
    size,
    split_growth_experiment,
    split_map,
    superimpose_map,
)

# Act 1: the bounded pair.  Entries (r, 1, 1) against (-r ,.., 1): the
# relative position is constant in r, so the naive cones do not diverge.
naive = superimpose_map(3)
r = Fraction(10 ** 6)
pa = ConePoint(
    (((1, 2), 1), ((1, 3), 1), ((2, 3), 1)),
    (r / (r + 2), 1 / (r + 2), 1 / (r + 2)),
    r + 2,
)
pb = ConePoint((((1, 3), -1), ((3, 2), 1)), (r / (r + 1), 1 / (r + 1)), r + 1)
a, b = naive(pa), naive(pb)
print("naive pair, r = 10^6:")
print("  A^-1 B =", (a.inverse() @ b).rows)
print("  distance:", size(a.inverse() @ b), "(independent of r)")

# Act 2: split the assignments into an upper and a lower factor.
splitm = split_map(3)
b2 = splitm(pb)
print("\nsplit image of the second point:", b2.rows)
print("distance after splitting:", round(size(a.inverse() @ b2), 3), "-> grows with r")

# The split product on the cone over <23+,31+> with values (x, y):
x, y = Fraction(2), Fraction(3)
p = ConePoint((((2, 3), 1), ((3, 1), 1)), (x / (x + y), y / (x + y)), x + y)
print("\nsplit image over <23+,31+> with (x,y)=(2,3):", splitm(p).rows)

# Act 3: certification.  Every disjoint pair of simplices, sampled interior
# rays, exact integer statistics; properness checks monotone escape.
for cm in (heisenberg_map(3), splitm):
    div = divergence_suite(cm)
    prop = properness_test(cm)
    print(f"\n{cm.name}: {div.passed}/{div.total} pairs diverge "
          f"(min growth {div.min_growth:.2f}), "
          f"{prop.passed}/{prop.total} rays proper")

# A single pair in detail: the distance statistic along the radius schedule.
rep = divergence_test(heisenberg_map(3), (((1, 2), 1),), (((1, 2), -1),),
                      radii=(1, 4, 16, 256, 2 ** 20))
print("\nD along the schedule for opposite signs at (1,2):",
      [round(d, 2) for d in rep.d_curve], rep.status)

# Fibrations compose: center times quotient rebuilds the unitriangular map.
from obstructor.complexes import SimplicialComplex

center_dom = SimplicialComplex.from_facets([{((1, 3), 1)}, {((1, 3), -1)}])
quot_dom = SimplicialComplex.from_facets(
    [{((1, 2), s1), ((2, 3), s2)} for s1 in (1, -1) for s2 in (1, -1)]
)


def place(point):
    entries = {pos: s * w * point.t for (pos, s), w in zip(point.simplex, point.weights)}
    return ExactMatrix.from_entries(3, entries)


from obstructor import ConeMap

alpha = ConeMap("center", center_dom, 3, place)
beta = ConeMap("quotient", quot_dom, 3, place)
tower = fibration_compose(alpha, beta, section=lambda g: g, embed=lambda g: g)
rep = divergence_suite(tower, samples=4)
print(f"\nfibration tower: {rep.passed}/{rep.total} pairs diverge")

# Growth of the split product under large subdiagonal entries.
print("\nsplit-product growth, n = 3, 50 samples per magnitude:")
for mag in (10, 1000, 100000):
    res = split_growth_experiment(3, mag, samples=50, seed=7)
    print(f"  magnitude {mag:>7}: min max-entry {res.min_max_entry}")
