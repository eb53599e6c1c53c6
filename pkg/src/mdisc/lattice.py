"""Exact integer geometry and linear algebra.

Everything here works on Python integers.  Points are tuples of ints,
matrices are sequences of integer rows.  Planar polygons are kept in a
canonical form (counterclockwise, starting at the lexicographically
smallest vertex, no collinear vertices) so that equality of polygons is
plain tuple equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, gcd
from typing import Iterable, Sequence

from .errors import RankDeficientError

LatticePoint = tuple[int, ...]
Matrix = Sequence[Sequence[int]]

# Above this many column subsets the lattice index is computed from the
# Hermite form instead of by enumerating minors.
MINOR_ENUMERATION_LIMIT = 20_000


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class Polygon:
    """A lattice polygon, possibly degenerate (a point or a segment)."""

    vertices: tuple[tuple[int, int], ...]

    @property
    def dim(self) -> int:
        return min(len(self.vertices) - 1, 2)

    def edges(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        """Edges in counterclockwise order; a segment has the single edge (a, b)."""
        vs = self.vertices
        if len(vs) < 2:
            return []
        if len(vs) == 2:
            return [(vs[0], vs[1])]
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def translate(self, t: Sequence[int]) -> "Polygon":
        return convex_hull([(x + t[0], y + t[1]) for x, y in self.vertices])


def convex_hull(points: Iterable[Sequence[int]]) -> Polygon:
    """Convex hull of planar lattice points (Andrew's monotone chain)."""
    pts = sorted({(int(p[0]), int(p[1])) for p in points})
    if not pts:
        raise ValueError("convex hull of an empty point set")
    if len(pts) <= 2:
        return Polygon(tuple(pts))

    def half(seq):
        out: list[tuple[int, int]] = []
        for p in seq:
            while len(out) >= 2 and _cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        hull = hull[:1]
    return Polygon(tuple(hull))


def normalized_area(P: Polygon) -> int:
    """Twice the Euclidean area, so that a primitive triangle has area 1."""
    vs = P.vertices
    if len(vs) < 3:
        return 0
    s = 0
    for (x0, y0), (x1, y1) in P.edges():
        s += x0 * y1 - x1 * y0
    return abs(s)


def lattice_length(a: Sequence[int], b: Sequence[int]) -> int:
    """Number of primitive lattice steps from a to b."""
    return gcd(*(int(y) - int(x) for x, y in zip(a, b)))


def boundary_lattice_points(P: Polygon) -> int:
    """Number of lattice points on the boundary.

    A segment counts both endpoints (length + 1); a point counts 1.
    """
    vs = P.vertices
    if len(vs) == 1:
        return 1
    if len(vs) == 2:
        return lattice_length(vs[0], vs[1]) + 1
    return sum(lattice_length(a, b) for a, b in P.edges())


def _edge_vectors(P: Polygon) -> tuple[tuple[int, int], list[tuple[int, int]]]:
    vs = P.vertices
    start = min(range(len(vs)), key=lambda i: (vs[i][1], vs[i][0]))
    if len(vs) == 1:
        return vs[0], []
    if len(vs) == 2:
        a, b = vs[start], vs[1 - start]
        d = (b[0] - a[0], b[1] - a[1])
        return a, [d, (-d[0], -d[1])]
    k = len(vs)
    out = []
    for i in range(k):
        p, q = vs[(start + i) % k], vs[(start + i + 1) % k]
        out.append((q[0] - p[0], q[1] - p[1]))
    return vs[start], out


def _angle_before(u, v) -> bool:
    hu = 0 if (u[1] > 0 or (u[1] == 0 and u[0] > 0)) else 1
    hv = 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1
    if hu != hv:
        return hu < hv
    return u[0] * v[1] - u[1] * v[0] > 0


def minkowski_sum(P: Polygon, Q: Polygon) -> Polygon:
    """Minkowski sum by merging the angularly sorted edge sequences."""
    p0, ep = _edge_vectors(P)
    q0, eq = _edge_vectors(Q)
    cur = (p0[0] + q0[0], p0[1] + q0[1])
    verts = [cur]
    i = j = 0
    while i < len(ep) or j < len(eq):
        if j == len(eq) or (i < len(ep) and _angle_before(ep[i], eq[j])):
            d = ep[i]
            i += 1
        else:
            d = eq[j]
            j += 1
        cur = (cur[0] + d[0], cur[1] + d[1])
        verts.append(cur)
    return convex_hull(verts)


def mixed_volume2(P: Polygon, Q: Polygon) -> int:
    """Planar mixed volume, normalized as the Bernstein root count.

    Equals EuclidArea(P+Q) - EuclidArea(P) - EuclidArea(Q), so that
    MV(P, P) = normalized_area(P).
    """
    twice = normalized_area(minkowski_sum(P, Q)) - normalized_area(P) - normalized_area(Q)
    assert twice % 2 == 0 and twice >= 0
    return twice // 2


# ---------------------------------------------------------------------------
# integer linear algebra


def det(M: Matrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    A = [list(map(int, row)) for row in M]
    n = len(A)
    if n == 0:
        return 1
    if any(len(row) != n for row in A):
        raise ValueError("determinant of a non-square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        rowk = A[k]
        for i in range(k + 1, n):
            ai = A[i]
            aik = ai[k]
            for j in range(k + 1, n):
                ai[j] = (ai[j] * akk - aik * rowk[j]) // prev
        prev = akk
    return sign * A[-1][-1]


def rank(M: Matrix) -> int:
    """Exact rank of an integer matrix."""
    A = [list(map(int, row)) for row in M]
    if not A:
        return 0
    nrows, ncols = len(A), len(A[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][c]
        for i in range(r + 1, nrows):
            aic = A[i][c]
            A[i] = [(x * p - aic * y) // prev for x, y in zip(A[i], A[r])]
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def transpose(M: Matrix) -> list[list[int]]:
    return [list(col) for col in zip(*M)]


def matmul(A: Matrix, B: Matrix) -> list[list[int]]:
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def maximal_minors(M: Matrix) -> dict[tuple[int, ...], int]:
    """All maximal minors, keyed by ascending column subsets."""
    rows = [list(r) for r in M]
    d = len(rows)
    m = len(rows[0]) if rows else 0
    out = {}
    for S in combinations(range(m), d):
        out[S] = det([[row[j] for j in S] for row in rows])
    return out


def _column_hermite(M: Matrix) -> tuple[list[list[int]], list[list[int]], list[int]]:
    """Column echelon form M @ U with U unimodular.

    Returns (MU, U, pivot_rows); columns past len(pivot_rows) of MU vanish.
    """
    A = [list(map(int, row)) for row in M]
    d = len(A)
    m = len(A[0]) if A else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]

    def colop(j, k, a, b, c, e):
        # (col_j, col_k) <- (a*col_j + b*col_k, c*col_j + e*col_k)
        for R in (A, U):
            for row in R:
                x, y = row[j], row[k]
                row[j], row[k] = a * x + b * y, c * x + e * y

    pivots: list[int] = []
    c = 0
    for i in range(d):
        if c == m:
            break
        for k in range(c + 1, m):
            x, y = A[i][c], A[i][k]
            if y == 0:
                continue
            # extended Euclid on (x, y)
            r0, r1, s0, s1, t0, t1 = x, y, 1, 0, 0, 1
            while r1 != 0:
                q = r0 // r1
                r0, r1 = r1, r0 - q * r1
                s0, s1 = s1, s0 - q * s1
                t0, t1 = t1, t0 - q * t1
            g = r0
            # s0*x + t0*y = g; second column becomes (-y/g)*col_c + (x/g)*col_k
            colop(c, k, s0, t0, -y // g, x // g)
        if A[i][c] == 0:
            continue
        if A[i][c] < 0:
            for R in (A, U):
                for row in R:
                    row[c] = -row[c]
        for k in range(c):
            q = A[i][k] // A[i][c]
            if q:
                for R in (A, U):
                    for row in R:
                        row[k] -= q * row[c]
        pivots.append(i)
        c += 1
    return A, U, pivots


def lll_reduce(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """LLL-reduced basis of the lattice spanned by linearly independent rows."""
    rows = [list(map(int, r)) for r in rows]
    if len(rows) <= 1:
        return rows
    from sympy.polys.domains import ZZ
    from sympy.polys.matrices import DomainMatrix

    dm = DomainMatrix([[ZZ(x) for x in r] for r in rows], (len(rows), len(rows[0])), ZZ)
    return [[int(x) for x in r] for r in dm.lll().to_list()]


def kernel_basis(M: Matrix, reduce: bool = True) -> list[list[int]]:
    """Rows form a basis of the integer lattice ker(M) ∩ Z^m.

    The basis comes from a unimodular column reduction and is LLL-reduced
    afterwards (``reduce=False`` skips that step).  A full-rank square
    matrix yields the empty list.
    """
    rows = [list(r) for r in M]
    if not rows:
        raise ValueError("kernel of a matrix without rows: number of columns unknown")
    m = len(rows[0])
    _, U, pivots = _column_hermite(rows)
    r = len(pivots)
    basis = [[U[i][j] for i in range(m)] for j in range(r, m)]
    if reduce and basis:
        basis = lll_reduce(basis)
    # deterministic sign: first nonzero entry positive
    out = []
    for v in basis:
        lead = next(x for x in v if x != 0)
        out.append([-x for x in v] if lead < 0 else v)
    return out


def gcd_maximal_minors(M: Matrix, method: str = "auto") -> int:
    """Gcd of all maximal minors (the index of the column lattice).

    ``method`` is "enumerate", "hermite" or "auto" (enumeration when the
    number of column subsets is at most MINOR_ENUMERATION_LIMIT).
    """
    rows = [list(r) for r in M]
    d = len(rows)
    m = len(rows[0]) if rows else 0
    if d == 0:
        return 1
    if rank(rows) < d:
        raise RankDeficientError("rank deficient")
    if method == "auto":
        method = "enumerate" if comb(m, d) <= MINOR_ENUMERATION_LIMIT else "hermite"
    if method == "enumerate":
        g = 0
        for S in combinations(range(m), d):
            g = gcd(g, det([[row[j] for j in S] for row in rows]))
            if g == 1:
                break
        return g
    if method == "hermite":
        H, _, pivots = _column_hermite(rows)
        out = 1
        for k, i in enumerate(pivots):
            out *= H[i][k]
        return abs(out)
    raise ValueError(f"unknown method {method!r}")
