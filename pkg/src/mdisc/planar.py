"""Closed-form bidegrees for pairs of planar configurations.

Areas are normalized (a primitive triangle has area 1) and MV is the
Bernstein count, so every quantity below is an integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .cayley import as_config, build_cayley
from .errors import NotFullDimensionalError
from .lattice import (
    Polygon,
    boundary_lattice_points,
    convex_hull,
    gcd_maximal_minors,
    lattice_length,
    mixed_volume2,
    normalized_area,
)


@dataclass(frozen=True)
class EdgeData:
    endpoints: tuple[tuple[int, int], tuple[int, int]]
    normal: tuple[int, int]
    length: int
    height: int

    @property
    def direction(self) -> tuple[int, int]:
        (a, b), (c, d) = self.endpoints
        g = self.length
        return ((c - a) // g, (d - b) // g)


@dataclass(frozen=True)
class ParallelPair:
    edge1: EdgeData
    edge2: EdgeData


@dataclass(frozen=True)
class Bidegree:
    cycle: tuple[int, int]
    lattice_index: int
    defective: bool = False

    @property
    def reduced(self) -> tuple[int, int]:
        g = self.lattice_index
        assert all(x % g == 0 for x in self.cycle), "cycle degree not divisible by the lattice index"
        return tuple(x // g for x in self.cycle)


@dataclass(frozen=True)
class UpperBound:
    bound: tuple[int, int]
    smooth_case: bool  # i(A1) = i(A2) = 1 and the three toric surfaces are smooth
    dense_case: bool  # same normal fan and one configuration dense

    @property
    def equality_guaranteed(self) -> bool:
        return self.smooth_case or self.dense_case


@dataclass(frozen=True)
class OneDimVerdict:
    delta2: int
    defective: bool
    case: str  # "no-parallel-edge" | "one-parallel-edge" | "two-parallel-edges"
    parallel_edges: tuple[EdgeData, ...]


def _points(A) -> list[tuple[int, int]]:
    return list(as_config(A).points)


def hull(A) -> Polygon:
    return convex_hull(_points(A))


def _require_2d(A, name="configuration") -> Polygon:
    P = hull(A)
    if P.dim < 2:
        raise NotFullDimensionalError(f"{name} is not full-dimensional")
    return P


def _dot(u, v) -> int:
    return u[0] * v[0] + u[1] * v[1]


def edge_data(A) -> list[EdgeData]:
    """Edges of conv(A) with primitive inner normal, lattice length and height."""
    pts = _points(A)
    P = _require_2d(pts)
    out = []
    for p, q in P.edges():
        dx, dy = q[0] - p[0], q[1] - p[1]
        g = gcd(dx, dy)
        eta = (-dy // g, dx // g)
        base = _dot(eta, p)
        height = min(_dot(eta, a) for a in pts if _dot(eta, a) != base) - base
        out.append(EdgeData((p, q), eta, g, height))
    return out


def strongly_parallel_pairs(A1, A2) -> list[ParallelPair]:
    e2 = {e.normal: e for e in edge_data(A2)}
    return [ParallelPair(e, e2[e.normal]) for e in edge_data(A1) if e.normal in e2]


def mixed_multiplicity(v, Ai, Aother) -> int:
    """Drop of MV(Q_i, Q_other) when v is removed from A_i."""
    pts = _points(Ai)
    v = tuple(v)
    if v not in pts:
        raise ValueError(f"{v} is not a point of the configuration")
    Q = hull(Aother)
    rest = [p for p in pts if p != v]
    if not rest:
        return mixed_volume2(convex_hull(pts), Q)
    return mixed_volume2(convex_hull(pts), Q) - mixed_volume2(convex_hull(rest), Q)


def multiplicity_bound(Ai, Aj) -> tuple[int, int]:
    """(sum of mmult over the vertices of A_i, total length of the edges of A_j
    with no strongly parallel partner in A_i).  The first never falls below
    the second."""
    normals_i = {e.normal for e in edge_data(Ai)}
    lonely = sum(e.length for e in edge_data(Aj) if e.normal not in normals_i)
    mm = sum(mixed_multiplicity(v, Ai, Aj) for v in hull(Ai).vertices)
    return mm, lonely


def _vertex_height(v, A) -> int:
    pts = _points(A)
    rest = [p for p in pts if p != tuple(v)]
    return normalized_area(convex_hull(pts)) - normalized_area(convex_hull(rest))


def _edge_discriminant_degree(e: EdgeData, A) -> int:
    """Degree of the discriminant cycle of the points of A on the edge e."""
    a = e.endpoints[0]
    dx, dy = e.direction
    base = _dot(e.normal, a)
    pos = sorted(
        ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) // (dx * dx + dy * dy)
        for p in _points(A)
        if _dot(e.normal, p) == base
    )
    return 2 * (pos[-1] - pos[0]) - (pos[1] - pos[0]) - (pos[-1] - pos[-2])


def _horizontal_degree(A) -> int:
    """Degree of the discriminant cycle of a single planar configuration."""
    P = hull(A)
    deg = 3 * normalized_area(P)
    deg -= sum(e.height * _edge_discriminant_degree(e, A) for e in edge_data(A))
    deg -= sum(_vertex_height(v, A) for v in P.vertices)
    return deg


def _closed_form_delta(A1, A2, first: bool) -> int:
    Q1, Q2 = hull(A1), hull(A2)
    mv = mixed_volume2(Q1, Q2)
    pairs = strongly_parallel_pairs(A1, A2)
    if first:
        area = normalized_area(Q2)
        facets = sum(min(p.edge1.height, p.edge2.height) * p.edge2.length for p in pairs)
        mm = sum(mixed_multiplicity(v, A1, A2) for v in Q1.vertices)
    else:
        area = normalized_area(Q1)
        facets = sum(min(p.edge1.height, p.edge2.height) * p.edge1.length for p in pairs)
        mm = sum(mixed_multiplicity(v, A2, A1) for v in Q2.vertices)
    return area + 2 * mv - facets - mm


def _principal_expansion(A1, A2, first: bool) -> int:
    # The same degree read off the factorization of the principal determinant:
    # subtract every face factor of the Cayley configuration in turn.
    Ai, Aj = (A1, A2) if first else (A2, A1)
    total = principal_bidegree(A1, A2)[0 if first else 1]
    horizontal = _horizontal_degree(Ai)
    assert horizontal >= 0, "negative discriminant degree for a face"
    total -= horizontal
    for e in edge_data(Ai):
        total -= e.height * _edge_discriminant_degree(e, Ai)
    for v in hull(Ai).vertices:
        total -= _vertex_height(v, Ai) + mixed_multiplicity(v, Ai, Aj)
    for p in strongly_parallel_pairs(A1, A2):
        u = min(p.edge1.height, p.edge2.height)
        total -= u * (p.edge2.length if first else p.edge1.length)
    return total


def principal_bidegree(A1, A2) -> tuple[int, int]:
    Q1, Q2 = _require_2d(A1, "A1"), _require_2d(A2, "A2")
    a1, a2 = normalized_area(Q1), normalized_area(Q2)
    mv = mixed_volume2(Q1, Q2)
    return (3 * a1 + a2 + 2 * mv, a1 + 3 * a2 + 2 * mv)


def planar_bidegree(A1, A2) -> Bidegree:
    """Bidegree of the mixed discriminant cycle of two full-dimensional configurations."""
    for name, A in (("A1", A1), ("A2", A2)):
        if hull(A).dim < 2:
            raise NotFullDimensionalError(
                f"{name} is not full-dimensional; use one_dim_degree for a segment"
            )
    d1 = _closed_form_delta(A1, A2, True)
    d2 = _closed_form_delta(A1, A2, False)
    assert d1 == _principal_expansion(A1, A2, True)
    assert d2 == _principal_expansion(A1, A2, False)
    sys = build_cayley([A1, A2])
    return Bidegree((d1, d2), sys.lattice_index, defective=(d1, d2) == (0, 0))


def lattice_points(P: Polygon) -> set[tuple[int, int]]:
    """All lattice points of a polygon, by scanning its bounding box."""
    xs = [v[0] for v in P.vertices]
    ys = [v[1] for v in P.vertices]
    edges = P.edges()
    out = set()
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            if P.dim < 2:
                if (x, y) in P.vertices or (
                    P.dim == 1 and _on_segment((x, y), *P.vertices)
                ):
                    out.add((x, y))
            elif all(
                (q[0] - p[0]) * (y - p[1]) - (q[1] - p[1]) * (x - p[0]) >= 0 for p, q in edges
            ):
                out.add((x, y))
    return out


def _on_segment(z, a, b) -> bool:
    cross = (b[0] - a[0]) * (z[1] - a[1]) - (b[1] - a[1]) * (z[0] - a[0])
    if cross:
        return False
    return min(a[0], b[0]) <= z[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= z[1] <= max(a[1], b[1])


def is_dense(A) -> bool:
    return set(_points(A)) == lattice_points(hull(A))


def config_lattice_index(A) -> int:
    """Index of the affine lattice generated by A in Z^2."""
    pts = _points(A)
    return gcd_maximal_minors([[1] * len(pts), [p[0] for p in pts], [p[1] for p in pts]])


def is_smooth(A) -> bool:
    """At every vertex the nearest points of A on the two incident edges form a lattice basis."""
    pts = set(_points(A))
    vs = hull(A).vertices
    k = len(vs)
    for i, v in enumerate(vs):
        dirs = []
        for w in (vs[(i + 1) % k], vs[i - 1]):
            g = lattice_length(v, w)
            dv = ((w[0] - v[0]) // g, (w[1] - v[1]) // g)
            if (v[0] + dv[0], v[1] + dv[1]) not in pts:
                return False
            dirs.append(dv)
        if abs(dirs[0][0] * dirs[1][1] - dirs[0][1] * dirs[1][0]) != 1:
            return False
    return True


def bidegree_upper_bound(A1, A2) -> UpperBound:
    Q1, Q2 = _require_2d(A1, "A1"), _require_2d(A2, "A2")
    mv = mixed_volume2(Q1, Q2)
    bound = (
        normalized_area(Q2) + 2 * mv - boundary_lattice_points(Q2),
        normalized_area(Q1) + 2 * mv - boundary_lattice_points(Q1),
    )
    p1, p2 = _points(A1), _points(A2)
    sums = {(a[0] + b[0], a[1] + b[1]) for a in p1 for b in p2}
    smooth = (
        config_lattice_index(p1) == 1
        and config_lattice_index(p2) == 1
        and is_smooth(p1)
        and is_smooth(p2)
        and is_smooth(list(sums))
    )
    same_fan = {e.normal for e in edge_data(p1)} == {e.normal for e in edge_data(p2)}
    dense = same_fan and (is_dense(p1) or is_dense(p2))
    return UpperBound(bound, smooth, dense)


def one_dim_degree(A1, A2) -> OneDimVerdict:
    """A2-degree when A1 is full-dimensional and A2 spans a segment."""
    _require_2d(A1, "A1")
    Q2 = hull(A2)
    if Q2.dim != 1:
        raise NotFullDimensionalError("A2 must span a segment")
    a, b = Q2.vertices
    g = lattice_length(a, b)
    direction = ((b[0] - a[0]) // g, (b[1] - a[1]) // g)
    par = tuple(
        e for e in edge_data(A1)
        if e.direction in (direction, (-direction[0], -direction[1]))
    )
    delta2 = normalized_area(hull(A1)) - sum(e.height * e.length for e in par)
    case = ("no-parallel-edge", "one-parallel-edge", "two-parallel-edges")[len(par)]
    return OneDimVerdict(delta2, delta2 == 0, case, par)


def planar_defective(A1, A2) -> tuple[bool, str]:
    """Classify defectiveness of two full-dimensional planar configurations.

    Defective exactly when both are three non-collinear points and A2 is a
    lattice translate of A1.
    """
    p1, p2 = _points(A1), _points(A2)
    _require_2d(p1, "A1")
    _require_2d(p2, "A2")
    if len(p1) != 3:
        return False, "A1 has more than three points"
    if len(p2) != 3:
        return False, "A2 has more than three points"
    s1, s2 = sorted(p1), sorted(p2)
    t = (s2[0][0] - s1[0][0], s2[0][1] - s1[0][1])
    if sorted((x + t[0], y + t[1]) for x, y in s1) != s2:
        return False, "triangles are not translates"
    return True, "translated triangles"
