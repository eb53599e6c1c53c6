"""Gale duals and the matroid of the Gale vectors.

Subsets of the ground set [m] are handled as int bitmasks internally and
exposed as sorted tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb, gcd
from typing import Sequence

from .errors import RankDeficientError
from .lattice import kernel_basis, rank


def _bits(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def _mask(items) -> int:
    out = 0
    for i in items:
        out |= 1 << i
    return out


@dataclass(frozen=True)
class GaleDual:
    """Rows of ``beta`` span the integer kernel of A; b_j is column j of beta."""

    beta: tuple[tuple[int, ...], ...]
    m: int

    @property
    def r(self) -> int:
        return len(self.beta)

    @property
    def vectors(self) -> list[tuple[int, ...]]:
        return [tuple(row[j] for row in self.beta) for j in range(self.m)]


def gale_dual(A: Sequence[Sequence[int]]) -> GaleDual:
    rows = [list(r) for r in A]
    if rank(rows) < len(rows):
        raise RankDeficientError("rank deficient")
    return GaleDual(tuple(tuple(v) for v in kernel_basis(rows)), len(rows[0]))


def _primitive_direction(v: Sequence[int]) -> tuple[int, ...]:
    g = gcd(*v)
    v = [x // g for x in v]
    lead = next(x for x in v if x)
    return tuple(-x for x in v) if lead < 0 else tuple(v)


@dataclass
class DualMatroid:
    """Matroid of a vector configuration b_1, ..., b_m (the dual matroid of A)."""

    vectors: tuple[tuple[int, ...], ...]
    _rank: dict = field(default_factory=dict, repr=False)
    _covers: dict = field(default_factory=dict, repr=False)

    @classmethod
    def from_gale(cls, g: GaleDual) -> "DualMatroid":
        return cls(tuple(g.vectors))

    @classmethod
    def from_matrix(cls, A) -> "DualMatroid":
        return cls.from_gale(gale_dual(A))

    @property
    def m(self) -> int:
        return len(self.vectors)

    @property
    def dim(self) -> int:
        return len(self.vectors[0]) if self.vectors else 0

    @property
    def rank_total(self) -> int:
        return self.rank_mask((1 << self.m) - 1)

    def rank_mask(self, mask: int) -> int:
        if mask not in self._rank:
            self._rank[mask] = rank([self.vectors[j] for j in _bits(mask)]) if mask else 0
        return self._rank[mask]

    def rank(self, S) -> int:
        return self.rank_mask(_mask(S))

    def closure_mask(self, mask: int) -> int:
        k = self.rank_mask(mask)
        out = mask
        for j in range(self.m):
            if not mask >> j & 1 and self.rank_mask(mask | 1 << j) == k:
                out |= 1 << j
        return out

    def closure(self, S) -> tuple[int, ...]:
        return _bits(self.closure_mask(_mask(S)))

    def is_flat(self, S) -> bool:
        return self.closure_mask(_mask(S)) == _mask(S)

    @property
    def loops(self) -> tuple[int, ...]:
        return tuple(j for j, b in enumerate(self.vectors) if not any(b))

    def covers_mask(self, flat: int) -> list[int]:
        """Flats covering ``flat``, found by grouping the projections mod its span."""
        if flat in self._covers:
            return self._covers[flat]
        inside = [self.vectors[j] for j in _bits(flat)]
        if inside:
            functionals = kernel_basis(inside, reduce=False)
        else:
            functionals = [[int(i == k) for i in range(self.dim)] for k in range(self.dim)]
        groups: dict[tuple[int, ...], int] = {}
        for j in range(self.m):
            if flat >> j & 1:
                continue
            proj = [sum(y * b for y, b in zip(f, self.vectors[j])) for f in functionals]
            if not any(proj):
                continue
            key = _primitive_direction(proj)
            groups[key] = groups.get(key, 0) | 1 << j
        out = sorted((flat | g for g in groups.values()), key=_bits)
        self._covers[flat] = out
        return out

    def flats_of_rank(self, k: int) -> list[tuple[int, ...]]:
        level = {self.closure_mask(0)}
        for _ in range(k):
            level = {c for f in level for c in self.covers_mask(f)}
        return sorted((_bits(f) for f in level))

    def iter_maximal_chain_masks(self):
        """Maximal chains of proper flats J_1 < ... < J_{r-1}, lazily, in depth-first order."""
        r = self.rank_total
        if r == 0:
            return
        stack = [(self.closure_mask(0), ())]
        while stack:
            F, chain = stack.pop()
            if len(chain) == r - 1:
                yield chain
                continue
            for G in reversed(self.covers_mask(F)):
                stack.append((G, chain + (G,)))

    def maximal_chain_masks(self) -> list[tuple[int, ...]]:
        return list(self.iter_maximal_chain_masks())

    def maximal_chains(self) -> list[tuple[tuple[int, ...], ...]]:
        return [tuple(_bits(F) for F in ch) for ch in self.maximal_chain_masks()]

    def bases(self) -> list[tuple[int, ...]]:
        r = self.rank_total
        out = []
        for S in combinations(range(self.m), r):
            if r == 0 or self.rank_mask(_mask(S)) == r:
                out.append(S)
        return out

    def canonical_id(self) -> tuple[int, ...]:
        """Sorted bitmasks of all bases; equal ids mean equal matroids."""
        return tuple(sorted(_mask(B) for B in self.bases()))

    def is_uniform(self) -> bool:
        return len(self.bases()) == comb(self.m, self.rank_total)


def dual_rank_from_matrix(A: Sequence[Sequence[int]], S) -> int:
    """Rank of S in the dual matroid computed from A alone.

    rank*(S) = |S| + rank_A([m] minus S) - rank_A([m]).
    """
    S = set(S)
    rows = [list(r) for r in A]
    m = len(rows[0])
    rest = [j for j in range(m) if j not in S]
    rA = rank(rows)
    rRest = rank([[row[j] for j in rest] for row in rows]) if rest else 0
    return len(S) + rRest - rA


def maximal_chains(M: DualMatroid):
    return M.maximal_chains()


def flats_of_rank(M: DualMatroid, k: int):
    return M.flats_of_rank(k)
