#!/usr/bin/env python3
"""Arrow complexes, signed doubles, joins, and obstruction degrees.

The arrow complex on n symbols has a vertex for every off-diagonal matrix
position and a simplex for every acyclic set of arrows.  Doubling each
vertex with a sign turns every k-simplex into a k-sphere; inside the double
sits a join of sphere-plus-point factors whose obstruction degree matches
the symmetric-space dimension count.
"""

from obstructor import (
    ObstructorShape,
    arrow_complex,
    betti_numbers,
    column_factor_map,
    expected_column_join,
    is_isomorphic_via,
    join,
    join_sphere,
    obstructor_subcomplex,
    sphere_betti,
    sphere_preimage,
)

# n = 3: six vertices, twelve edges, six triangles -- an annulus.
c3 = arrow_complex(3)
print("C(3) f-vector:", c3.f_vector())
print("C(3) euler characteristic:", c3.euler_characteristic())
print("C(3) rational betti numbers:", betti_numbers(c3), "(an annulus)")
print("<12,23,13> is a simplex:", c3.has_simplex({(1, 2), (2, 3), (1, 3)}))
print("<12,21> is a simplex:", c3.has_simplex({(1, 2), (2, 1)}))

# The signed double replaces each k-simplex by a k-sphere with 2^(k+1) top
# cells.
tri = {(1, 2), (2, 3), (1, 3)}
pre = sphere_preimage(tri)
print("\npreimage of a triangle:", len(pre.facets), "facets, betti", betti_numbers(pre))
edge = {(1, 2), (1, 3)}
print("preimage of an edge:", betti_numbers(sphere_preimage(edge)), "= circle")

# Join arithmetic: spheres triangulated as joins of 0-spheres.
s1 = join(join_sphere(0), join_sphere(0))
print("\nS0 * S0 betti:", betti_numbers(s1))
print("S0 * S1 betti:", betti_numbers(join(join_sphere(0), s1)))

# The distinguished subcomplex of the double: one sphere per column plus an
# added point below the diagonal, joined across columns.
for n in (3, 4, 5):
    L = obstructor_subcomplex(n)
    iso = is_isomorphic_via(L, expected_column_join(n), column_factor_map(n))
    shape = ObstructorShape(None, tuple(range(n - 1)))
    print(f"L({n}): {len(L.vertices)} vertices, {len(L.facets)} facets, "
          f"join structure verified: {iso}, obstruction degree m = {shape.m}")

# Two different shapes, one obstruction degree: the real-quadratic family
# at n = 4 can be presented with or without a plain sphere factor.
no_sphere = ObstructorShape(None, (2, 4, 6))      # unit factors folded in
paired = ObstructorShape(2, (1, 3, 5))            # diagonal-pair sphere split off
print("\nm without a plain sphere:", no_sphere.m)
print("m with the diagonal-pair sphere:", paired.m)
