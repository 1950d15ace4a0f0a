"""Simplicial complexes: arrow complexes, signed doubles, joins, homology.

Complexes are stored by their maximal simplices (facets) over hashable
vertex labels.  Full face enumeration happens only inside the homology
routine, so large complexes stay cheap to build and join.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: tuple
    facets: tuple[frozenset, ...]

    @classmethod
    def from_facets(cls, facets, vertices=None, assume_maximal=False) -> "SimplicialComplex":
        distinct = list(dict.fromkeys(frozenset(f) for f in facets))
        if assume_maximal:
            keep = distinct
        else:
            keep = [f for f in distinct if not any(f < g for g in distinct)]
        vs = set()
        for f in keep:
            vs |= f
        if vertices is not None:
            vertices = tuple(vertices)
            if not vs <= set(vertices):
                raise ValueError("facet vertex outside the vertex set")
        else:
            vertices = tuple(sorted(vs, key=repr))
        return cls(vertices=vertices, facets=tuple(sorted(keep, key=lambda s: sorted(map(repr, s)))))

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1 if self.facets else -1

    def has_simplex(self, s) -> bool:
        s = frozenset(s)
        return any(s <= f for f in self.facets)

    def simplices(self):
        """All nonempty simplices (materializes the closure; small complexes only)."""
        seen: set[frozenset] = set()
        for f in self.facets:
            f = sorted(f, key=repr)
            for k in range(1, len(f) + 1):
                for c in combinations(f, k):
                    seen.add(frozenset(c))
        return seen

    def f_vector(self) -> tuple[int, ...]:
        counts: dict[int, int] = {}
        for s in self.simplices():
            counts[len(s) - 1] = counts.get(len(s) - 1, 0) + 1
        return tuple(counts.get(k, 0) for k in range(self.dim + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * c for k, c in enumerate(self.f_vector()))

    def to_json(self) -> dict:
        idx = {v: i for i, v in enumerate(self.vertices)}
        return {
            "vertices": [str(v) for v in self.vertices],
            "maximal": [sorted(idx[v] for v in f) for f in self.facets],
        }

    def __repr__(self) -> str:
        return f"SimplicialComplex({len(self.vertices)} vertices, {len(self.facets)} facets)"


def join(x: SimplicialComplex, y: SimplicialComplex) -> SimplicialComplex:
    """Join of two complexes; vertices are tagged if the label sets collide."""
    if set(x.vertices) & set(y.vertices):
        x = relabel(x, lambda v: (0, v))
        y = relabel(y, lambda v: (1, v))
    if not x.facets:
        return y
    if not y.facets:
        return x
    facets = [fx | fy for fx in x.facets for fy in y.facets]
    return SimplicialComplex.from_facets(
        facets, vertices=x.vertices + y.vertices, assume_maximal=True
    )


def relabel(x: SimplicialComplex, f) -> SimplicialComplex:
    return SimplicialComplex.from_facets(
        [{f(v) for v in fac} for fac in x.facets],
        vertices=tuple(f(v) for v in x.vertices),
    )


def join_sphere(k: int) -> SimplicialComplex:
    """The k-sphere triangulated as the (k+1)-fold join of 0-spheres."""
    if k < 0:
        raise ValueError("sphere dimension must be >= 0")
    facets = [frozenset((i, s) for i, s in enumerate(signs)) for signs in product((1, -1), repeat=k + 1)]
    return SimplicialComplex.from_facets(facets, assume_maximal=True)


def sphere_plus(k: int) -> SimplicialComplex:
    """The k-sphere with one extra isolated point."""
    s = join_sphere(k)
    return SimplicialComplex.from_facets(list(s.facets) + [frozenset({"pt"})])


# ---------------------------------------------------------------------------
# arrow complexes

def is_acyclic(arrows) -> bool:
    """Kahn's algorithm on the arrow set viewed as a digraph."""
    arrows = list(arrows)
    nodes = {i for i, _ in arrows} | {j for _, j in arrows}
    indeg = {v: 0 for v in nodes}
    out: dict[int, list[int]] = {v: [] for v in nodes}
    for i, j in arrows:
        indeg[j] += 1
        out[i].append(j)
    queue = [v for v in nodes if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == len(nodes)


def arrow_complex(n: int) -> SimplicialComplex:
    """Vertices are off-diagonal positions (i, j); facets are the arrow sets
    of total orders, so a vertex set is a simplex iff it is acyclic."""
    if n < 2:
        raise ValueError("need n >= 2")
    facets = []
    for perm in permutations(range(1, n + 1)):
        facets.append(frozenset((perm[a], perm[b]) for a in range(n) for b in range(a + 1, n)))
    vertices = tuple((i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j)
    return SimplicialComplex.from_facets(facets, vertices=vertices, assume_maximal=True)


def signed_double(x: SimplicialComplex) -> SimplicialComplex:
    """Double every vertex with a sign; simplices are the sign-injective lifts."""
    facets = []
    for f in x.facets:
        f = sorted(f, key=repr)
        for signs in product((1, -1), repeat=len(f)):
            facets.append(frozenset((v, s) for v, s in zip(f, signs)))
    vertices = tuple((v, s) for v in x.vertices for s in (1, -1))
    return SimplicialComplex.from_facets(facets, vertices=vertices, assume_maximal=True)


def sphere_preimage(simplex) -> SimplicialComplex:
    """The signed double of a single simplex: a sphere of the same dimension."""
    return signed_double(SimplicialComplex.from_facets([frozenset(simplex)]))


def obstructor_subcomplex(n: int) -> SimplicialComplex:
    """The distinguished subcomplex of the signed double of arrow_complex(n).

    For each column k = 2..n the signed positions (i, k), i < k, form a
    (k-2)-sphere (all sign choices) and the extra vertex ((k, k-1), +) is
    its added point; the whole complex is the join of these sphere-plus-point
    pieces.  Every facet is an acyclic signed arrow set, hence a simplex of
    the signed double.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    factor_choices = []
    for k in range(2, n + 1):
        sphere = [
            frozenset(((i, k), s) for i, s in zip(range(1, k), signs))
            for signs in product((1, -1), repeat=k - 1)
        ]
        point = frozenset({((k, k - 1), 1)})
        factor_choices.append(sphere + [point])
    facets = []
    for picks in product(*factor_choices):
        fac = frozenset().union(*picks)
        if not is_acyclic({pos for pos, _ in fac}):
            raise AssertionError("column join facet is not acyclic")
        facets.append(fac)
    vertices = []
    for k in range(2, n + 1):
        vertices.extend(((i, k), s) for i in range(1, k) for s in (1, -1))
        vertices.append(((k, k - 1), 1))
    return SimplicialComplex.from_facets(facets, vertices=tuple(vertices), assume_maximal=True)


def column_factor_map(n: int):
    """Canonical bijection from obstructor_subcomplex(n) vertices to join labels.

    Column-k sphere vertex ((i, k), s) goes to factor k-2, slot i-1, sign s;
    the point ((k, k-1), +) goes to that factor's added point.
    """

    def f(v):
        (i, j), s = v
        if i < j:
            return (j - 2, (i - 1, s))
        return (i - 2, "pt")

    return f


def expected_column_join(n: int) -> SimplicialComplex:
    """The join of sphere-plus-point factors of dimensions 0..n-2."""
    out = relabel(sphere_plus(0), lambda v: (0, v))
    for k in range(1, n - 1):
        out = join(out, relabel(sphere_plus(k), lambda v: (k, v)))
    return out


def is_isomorphic_via(x: SimplicialComplex, y: SimplicialComplex, f) -> bool:
    """Does the explicit vertex map f carry x's facets exactly onto y's?"""
    if sorted(map(repr, (f(v) for v in x.vertices))) != sorted(map(repr, y.vertices)):
        return False
    mapped = {frozenset(f(v) for v in fac) for fac in x.facets}
    return mapped == set(y.facets)


# ---------------------------------------------------------------------------
# homology

def exact_rank(rows: list[list[int]]) -> int:
    """Rank over the rationals by Gaussian elimination with exact fractions."""
    if not rows or not rows[0]:
        return 0
    m = [[Fraction(x) for x in row] for row in rows]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, nrows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = m[row][col]
        m[row] = [x / inv for x in m[row]]
        for r in range(nrows):
            if r != row and m[r][col] != 0:
                c = m[r][col]
                m[r] = [a - c * b for a, b in zip(m[r], m[row])]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def betti_numbers(x: SimplicialComplex) -> tuple[int, ...]:
    """Rational Betti numbers from boundary-matrix ranks (exact arithmetic)."""
    if not x.facets:
        return ()
    by_dim: dict[int, list[tuple]] = {}
    for s in x.simplices():
        key = tuple(sorted(s, key=repr))
        by_dim.setdefault(len(key) - 1, []).append(key)
    top = max(by_dim)
    for k in by_dim:
        by_dim[k].sort(key=repr)
    index = {k: {s: i for i, s in enumerate(by_dim[k])} for k in by_dim}
    ranks = {0: 0}
    for k in range(1, top + 1):
        rows = [[0] * len(by_dim[k]) for _ in by_dim[k - 1]]
        for col, s in enumerate(by_dim[k]):
            for drop in range(len(s)):
                face = s[:drop] + s[drop + 1:]
                rows[index[k - 1][face]][col] = (-1) ** drop
        ranks[k] = exact_rank(rows)
    ranks[top + 1] = 0
    betti = []
    for k in range(top + 1):
        betti.append(len(by_dim[k]) - ranks[k] - ranks[k + 1])
    return tuple(betti)


def sphere_betti(k: int) -> tuple[int, ...]:
    if k == 0:
        return (2,)
    return (1,) + (0,) * (k - 1) + (1,)


# ---------------------------------------------------------------------------
# obstructor arithmetic

@dataclass(frozen=True)
class ObstructorShape:
    """A join of an optional plain sphere and sphere-plus-point factors."""

    sphere_dim: int | None
    plus_dims: tuple[int, ...]

    def __post_init__(self):
        if self.sphere_dim is not None and self.sphere_dim < 0:
            raise ValueError("sphere dimension must be >= 0")
        if any(k < 0 for k in self.plus_dims):
            raise ValueError("factor dimensions must be >= 0")
        if self.m < -1:
            raise ValueError("shape has m < -1")

    @property
    def m(self) -> int:
        r = len(self.plus_dims)
        total = sum(self.plus_dims) + 2 * r
        if self.sphere_dim is not None:
            return self.sphere_dim + total - 1
        return total - 2

    def describe(self) -> str:
        parts = []
        if self.sphere_dim is not None:
            parts.append(f"S^{self.sphere_dim}")
        parts.extend(f"S^{k}+" for k in self.plus_dims)
        return " * ".join(parts) if parts else "(empty)"


def obstructor_m(shape: ObstructorShape) -> int:
    """The obstruction degree of the join shape."""
    return shape.m
