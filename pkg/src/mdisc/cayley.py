"""Cayley configurations of point systems.

Column convention: blocks in input order, points inside a block in input
order.  Every sign-sensitive quantity downstream (Plücker coordinates,
stratum fingerprints) refers to this order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DimensionMismatchError
from .lattice import gcd_maximal_minors, maximal_minors, rank


@dataclass(frozen=True)
class PointConfig:
    """An ordered support A_i of distinct lattice points in Z^dim."""

    points: tuple[tuple[int, ...], ...]
    label: str = ""

    def __post_init__(self):
        pts = tuple(tuple(int(x) for x in p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise ValueError("a point configuration needs at least one point")
        if len({len(p) for p in pts}) != 1:
            raise DimensionMismatchError("points of different dimensions in one configuration")
        if len(set(pts)) != len(pts):
            raise ValueError("duplicate point")

    @property
    def dim(self) -> int:
        return len(self.points[0])

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def translate(self, t: Sequence[int]) -> "PointConfig":
        return PointConfig(tuple(tuple(a + b for a, b in zip(p, t)) for p in self.points), self.label)

    def transform(self, U: Sequence[Sequence[int]]) -> "PointConfig":
        """Apply the linear map p -> U p."""
        pts = tuple(tuple(sum(u * x for u, x in zip(row, p)) for row in U) for p in self.points)
        return PointConfig(pts, self.label)

    def without(self, p: Sequence[int]) -> "PointConfig":
        p = tuple(p)
        return PointConfig(tuple(q for q in self.points if q != p), self.label)


def as_config(obj, label: str = "") -> PointConfig:
    if isinstance(obj, PointConfig):
        return obj
    return PointConfig(tuple(tuple(p) for p in obj), label)


@dataclass(frozen=True)
class CayleySystem:
    configs: tuple[PointConfig, ...]
    matrix: tuple[tuple[int, ...], ...]
    blocks: tuple[tuple[int, ...], ...]
    lattice_index: int
    degenerate: bool = False
    _plucker: dict = field(default=None, compare=False, repr=False)

    @property
    def n(self) -> int:
        return len(self.configs)

    @property
    def m(self) -> int:
        return len(self.matrix[0])

    @property
    def d(self) -> int:
        return len(self.matrix)

    @property
    def codim(self) -> int:
        return self.m - self.d

    def block_of(self, col: int) -> int:
        for k, blk in enumerate(self.blocks):
            if col in blk:
                return k
        raise IndexError(col)


def build_cayley(configs: Iterable) -> CayleySystem:
    """Assemble Cay(A_1, ..., A_n).

    The top n rows are the block indicator vectors, the bottom n rows hold
    the points.  A rank-deficient matrix is returned with ``degenerate``
    set and lattice index 0 instead of raising.
    """
    cfgs = tuple(as_config(c) for c in configs)
    n = len(cfgs)
    if n == 0:
        raise ValueError("need at least one configuration")
    for k, c in enumerate(cfgs, 1):
        if c.dim != n:
            raise DimensionMismatchError(
                f"configuration {k} lives in Z^{c.dim} but there are {n} configurations"
            )
    cols, blocks = [], []
    for k, c in enumerate(cfgs):
        blk = []
        for p in c.points:
            blk.append(len(cols))
            cols.append(tuple(int(j == k) for j in range(n)) + p)
        blocks.append(tuple(blk))
    matrix = tuple(zip(*cols))
    if rank(matrix) < 2 * n:
        return CayleySystem(cfgs, matrix, tuple(blocks), 0, degenerate=True)
    return CayleySystem(cfgs, matrix, tuple(blocks), gcd_maximal_minors(matrix))


def plucker(sys: CayleySystem) -> dict[tuple[int, ...], int]:
    """All maximal minors of the Cayley matrix, keyed by ascending column subsets."""
    if sys._plucker is None:
        object.__setattr__(sys, "_plucker", maximal_minors(sys.matrix))
    return dict(sys._plucker)


def _wedge_sign(S: tuple[int, ...], i: int) -> int:
    # e_S ^ e_i rearranged into ascending order
    return -1 if sum(1 for s in S if s > i) % 2 else 1


def vanishing_forms(m: int, d: int, blocks: Sequence[Sequence[int]]) -> list[dict]:
    """Linear forms on Plücker space given by the coordinates of xi ^ e_{I_j}.

    Each form is a dict {column subset: coefficient}.  They vanish on the
    Plücker vector of every d-dimensional row space containing all the
    indicator vectors e_{I_j}.
    """
    forms = []
    for blk in blocks:
        blk = set(blk)
        for T in combinations(range(m), d + 1):
            form = {}
            for i in T:
                if i in blk:
                    S = tuple(t for t in T if t != i)
                    form[S] = _wedge_sign(S, i)
            if form:
                forms.append(form)
    return forms


def in_mixed_grassmannian(p: dict, m: int, d: int, blocks) -> bool:
    """Membership test: every vanishing form evaluates to zero on p."""
    return all(
        sum(c * p.get(S, 0) for S, c in form.items()) == 0
        for form in vanishing_forms(m, d, blocks)
    )
