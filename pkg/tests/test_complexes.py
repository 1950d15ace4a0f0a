import random
from itertools import combinations, permutations

import pytest

from obstructor import (
    ObstructorShape,
    SimplicialComplex,
    arrow_complex,
    betti_numbers,
    column_factor_map,
    expected_column_join,
    is_acyclic,
    is_isomorphic_via,
    join,
    join_sphere,
    obstructor_m,
    obstructor_subcomplex,
    signed_double,
    sphere_betti,
    sphere_plus,
    sphere_preimage,
)


def brute_acyclic(arrows):
    """Independent acyclicity oracle: some total order puts all arrows forward."""
    nodes = sorted({i for a in arrows for i in a})
    return any(
        all(order.index(i) < order.index(j) for i, j in arrows)
        for order in permutations(nodes)
    )


def test_arrow_complex_simplices_match_brute_force():
    c = arrow_complex(3)
    assert c.has_simplex({(1, 2), (2, 3), (1, 3)})
    assert not c.has_simplex({(1, 2), (2, 1)})
    for k in range(1, 4):
        for sub in combinations(c.vertices, k):
            assert c.has_simplex(sub) == brute_acyclic(sub), sub


def test_arrow_complex_f_vector_oracle():
    c = arrow_complex(3)
    counts = {}
    for k in range(1, 7):
        counts[k - 1] = sum(
            1 for sub in combinations(c.vertices, k) if brute_acyclic(sub)
        )
    fv = c.f_vector()
    assert fv == (6, 12, 6)
    assert all(counts.get(k, 0) == (fv[k] if k < len(fv) else 0) for k in range(6))
    assert c.euler_characteristic() == 0


def test_arrow_complex_betti_annulus():
    assert betti_numbers(arrow_complex(3)) == (1, 1, 0)


def test_signed_double_smalls():
    v = SimplicialComplex.from_facets([{"a"}])
    dv = signed_double(v)
    assert len(dv.vertices) == 2 and dv.dim == 0
    assert betti_numbers(dv) == sphere_betti(0)
    e = SimplicialComplex.from_facets([{"a", "b"}])
    de = signed_double(e)
    assert len(de.vertices) == 4 and len(de.facets) == 4
    assert betti_numbers(de) == sphere_betti(1)


def test_signed_double_of_c3():
    sc = signed_double(arrow_complex(3))
    assert len(sc.vertices) == 12
    for f in arrow_complex(3).facets:
        pre = sphere_preimage(f)
        assert len(pre.facets) == 2 ** 3
        assert betti_numbers(pre) == sphere_betti(2)


def test_lift_counts_c4():
    c = arrow_complex(4)
    for k in range(0, 4):
        for sub in combinations(c.vertices, k + 1):
            if not c.has_simplex(sub):
                continue
            pre = sphere_preimage(sub)
            assert len(pre.facets) == 2 ** (k + 1)


def test_signed_double_commutes_with_join():
    x = SimplicialComplex.from_facets([{"a", "b"}, {"b", "c"}])
    y = SimplicialComplex.from_facets([{1, 2}])
    lhs = signed_double(join(x, y))
    rhs = join(signed_double(x), signed_double(y))
    # same labels on both sides when the inputs have disjoint labels
    f = lambda v: v
    assert is_isomorphic_via(lhs, rhs, f)


def test_join_smalls():
    four_cycle = join(join_sphere(0), join_sphere(0))
    assert betti_numbers(four_cycle) == (1, 1)
    pt = SimplicialComplex.from_facets([{"p"}])
    cone = join(pt, four_cycle)
    assert betti_numbers(cone) == (1, 0, 0)
    s2 = join(join_sphere(0), four_cycle)
    assert betti_numbers(s2) == (1, 0, 1)


def test_boundary_of_simplex_betti():
    for k in (1, 2, 3):
        facets = [frozenset(c) for c in combinations(range(k + 2), k + 1)]
        x = SimplicialComplex.from_facets(facets)
        assert betti_numbers(x) == sphere_betti(k)


def test_reduced_euler_multiplicative_under_join():
    rng = random.Random(7)
    def rand_complex(tag):
        verts = [(tag, i) for i in range(4)]
        facets = []
        for _ in range(3):
            k = rng.randint(1, 3)
            facets.append(frozenset(rng.sample(verts, k)))
        return SimplicialComplex.from_facets(facets)

    for _ in range(6):
        x, y = rand_complex("x"), rand_complex("y")
        red = lambda z: z.euler_characteristic() - 1
        assert red(join(x, y)) == -red(x) * red(y)


def test_obstructor_subcomplex_small_cases():
    l2 = obstructor_subcomplex(2)
    assert len(l2.vertices) == 3
    assert is_isomorphic_via(l2, expected_column_join(2), column_factor_map(2))
    l3 = obstructor_subcomplex(3)
    assert len(l3.vertices) == 8
    assert is_isomorphic_via(l3, expected_column_join(3), column_factor_map(3))
    l4 = obstructor_subcomplex(4)
    sizes = sorted(
        len([v for v in l4.vertices if column_factor_map(4)(v)[0] == f]) for f in range(3)
    )
    assert sizes == [3, 5, 7]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_obstructor_subcomplex_sits_inside_signed_double(n):
    sc = signed_double(arrow_complex(n))
    for f in obstructor_subcomplex(n).facets:
        assert sc.has_simplex(f)


def test_obstructor_subcomplex_facets_are_acyclic_all_n():
    for n in (5, 6):
        for f in obstructor_subcomplex(n).facets:
            assert is_acyclic([pos for pos, _ in f])


def test_obstructor_m_examples():
    assert obstructor_m(ObstructorShape(None, (0, 1))) == 3
    for n in range(2, 10):
        assert obstructor_m(ObstructorShape(None, tuple(range(n - 1)))) == n * (n + 1) // 2 - 3
    for n in range(2, 8):
        shape = ObstructorShape(n - 2, tuple(range(1, 2 * n - 2, 2)))
        assert obstructor_m(shape) == n * n + n - 4


def test_obstructor_m_monotone():
    base = ObstructorShape(None, (1, 2, 3))
    bigger = ObstructorShape(None, (1, 2, 4))
    more = ObstructorShape(None, (1, 2, 3, 0))
    assert bigger.m > base.m
    assert more.m > base.m
    with_sphere = ObstructorShape(0, (1, 2, 3))
    assert with_sphere.m > base.m


def test_shape_validation():
    with pytest.raises(ValueError):
        ObstructorShape(-1, (0,))
    with pytest.raises(ValueError):
        ObstructorShape(None, (-2,))
    with pytest.raises(ValueError):
        ObstructorShape(None, ())  # m = -2 < -1


def test_json_round_trip():
    c = arrow_complex(3)
    data = c.to_json()
    assert len(data["vertices"]) == 6
    assert all(len(f) == 3 for f in data["maximal"])
    assert all(all(isinstance(i, int) for i in f) for f in data["maximal"])
