"""Degrees of A-discriminant cycles by tropical ray shooting.

For a generic weight w the exponent of x_i in the initial monomial of the
discriminant cycle is

    sum over maximal chains J with beta(w) in R_{>0}{sigma_J1, ..., -b_i}
        of |det(A^T, e_J1, ..., e_Jr-1, e_i)|,

where b_1..b_m is a Gale dual of A and sigma_J is the sum of b_j over J.
Everything is decided inside the Gale dual.  The chain data is
precomputed once per matrix with a batched fraction-free Gauss-Jordan
elimination, after which each weight costs a few array operations.

The determinant of the m x m matrix factors through the Gale dual:
det(A^T | E) = c * det(beta E) with c = det(A A^T) / det(A^T | beta^T).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from itertools import islice
from math import isqrt
from fractions import Fraction
from typing import Sequence

import numpy as np

from .cayley import CayleySystem
from .errors import (
    DegenerateWeightError,
    GenericityError,
    InstabilityError,
    RankDeficientError,
    SizeGateError,
)
from .lattice import det, matmul, rank, transpose
from .matroid import DualMatroid, gale_dual

WEIGHT_RANGE = 10**6
MAX_RETRIES = 32
MAX_CODIM = 8
MAX_COLUMNS = 24
_INT64_SAFE = 2**62


@dataclass(frozen=True)
class WeightCertificate:
    w: tuple[int, ...]
    seed: int
    retries: int


@dataclass(frozen=True)
class RayShootResult:
    w: tuple[int, ...]
    exponents: tuple[int, ...]
    block_degrees: tuple[int, ...]
    # (chain index, column, |det|) for every contributing pair
    contributions: tuple[tuple[int, int, int], ...] = ()
    status: str = "ok"
    retries: int = 0


@dataclass(frozen=True)
class TropicalDegree:
    cycle: tuple[int, ...]
    lattice_index: int
    defective: bool
    status: str
    seeds: tuple[int, ...] = ()
    runs: tuple[RayShootResult, ...] = field(default=(), repr=False)

    @property
    def reduced(self) -> tuple[int, ...]:
        g = self.lattice_index
        if g == 0:
            return tuple(0 for _ in self.cycle)
        if any(x % g for x in self.cycle):
            raise InstabilityError(
                f"cycle degree {self.cycle} not divisible by lattice index {g}: report bug"
            )
        return tuple(x // g for x in self.cycle)


def generic_weight(m: int, seed: int, retry: int = 0) -> WeightCertificate:
    """Deterministic weight number ``retry`` in the stream for ``seed``.

    Entries are uniform in [-WEIGHT_RANGE, WEIGHT_RANGE].
    """
    if m < 1:
        raise ValueError("m must be positive")
    rng = random.Random(seed)
    for _ in range(retry):
        for _ in range(m):
            rng.randint(-WEIGHT_RANGE, WEIGHT_RANGE)
    w = tuple(rng.randint(-WEIGHT_RANGE, WEIGHT_RANGE) for _ in range(m))
    return WeightCertificate(w, seed, retry)


def _hadamard(cols) -> int:
    # crude bound for any minor built from these columns
    norms = sorted((sum(int(x) * int(x) for x in c) for c in cols), reverse=True)
    b = 1
    for v in norms:
        b *= max(v, 1)
    return isqrt(b) + 1


class _Chunk:
    """Eliminated chain data for a slice of the chain enumeration."""

    __slots__ = ("ids", "G", "D", "G_obj", "D_obj", "fast")


class RayShooter:
    """Chain data of one matrix, reusable across many weights.

    Chains are processed in chunks of CHUNK_SIZE.  Chunks are kept in memory
    while the total stays under CACHE_LIMIT chains; beyond that they are
    recomputed for every weight so memory stays bounded.
    """

    CHUNK_SIZE = 50_000
    CACHE_LIMIT = 400_000

    def __init__(self, A: Sequence[Sequence[int]], blocks=None, force: bool = False):
        rows = [list(map(int, r)) for r in A]
        self.A = rows
        self.d = len(rows)
        self.m = len(rows[0])
        self.blocks = tuple(tuple(b) for b in blocks) if blocks else (tuple(range(self.m)),)
        if rank(rows) < self.d:
            raise RankDeficientError("rank deficient")
        if rank(rows + [[1] * self.m]) != self.d:
            raise ValueError("the all-ones vector is not in the row span of A")
        self.r = self.m - self.d
        if not force and (self.r > MAX_CODIM or self.m > MAX_COLUMNS):
            raise SizeGateError(
                f"instance has m={self.m} columns and codimension {self.r}; exhaustive chain "
                f"enumeration is limited to codimension <= {MAX_CODIM} and m <= {MAX_COLUMNS} "
                "(pass force=True / --force to override)"
            )
        self.status = "ok"
        self._cache = None
        if self.r == 0:
            self.status = "defective"
            return
        self.gale = gale_dual(rows)
        self.matroid = DualMatroid.from_gale(self.gale)
        if self.matroid.loops:
            # a loop of the dual matroid makes A a pyramid
            self.status = "defective"
            return
        self.beta = [list(r) for r in self.gale.beta]
        N = [list(c) for c in zip(*(rows + self.beta))]  # [A^T | beta^T]
        self.scale = Fraction(det(matmul(rows, transpose(rows))), det(N))
        colsum = [sum(abs(x) for x in row) for row in self.beta]
        sig_bound = _hadamard([colsum] * (self.r - 1) + [[1]] * self.r)
        self._dtype = object if 2 * sig_bound * sig_bound >= _INT64_SAFE else np.int64

    # -- precomputation -------------------------------------------------
    def _eliminate(self, chains, start: int) -> _Chunk:
        r, m, dtype = self.r, self.m, self._dtype
        L = len(chains)
        ind = np.zeros((L, r - 1, m), dtype=np.int64)
        for c, ch in enumerate(chains):
            for k, F in enumerate(ch):
                for j in range(m):
                    if F >> j & 1:
                        ind[c, k, j] = 1
        B = np.array(self.beta, dtype=object)
        Bn = np.array(self.beta, dtype=dtype)
        sigma = np.swapaxes(ind.astype(dtype) @ Bn.T, 1, 2)  # (L, r, r-1)
        eye = np.broadcast_to(np.eye(r, dtype=dtype), (L, r, r))
        X = np.concatenate([sigma, eye], axis=2).astype(dtype)
        used = np.zeros((L, r), dtype=bool)
        alive = np.ones(L, dtype=bool)
        prev = np.ones(L, dtype=dtype)
        pivots = np.zeros((L, r - 1), dtype=np.int64)
        idx = np.arange(L)
        # fraction-free Gauss-Jordan on [sigma | I], pivoting per chain
        for k in range(r - 1):
            cand = (X[:, :, k] != 0) & ~used
            has = cand.any(axis=1)
            alive &= has
            prow = np.argmax(cand, axis=1)
            pivots[:, k] = prow
            used[idx, prow] |= has
            pk = np.where(has, X[idx, prow, k], 1)
            P = X[idx, prow, :]
            col = X[:, :, k]
            newX = (pk[:, None, None] * X - col[:, :, None] * P[:, None, :]) // prev[:, None, None]
            newX[idx, prow, :] = P
            X = np.where(has[:, None, None], newX, X)
            prev = np.where(has, pk, prev)
        keep = np.nonzero(alive)[0]
        X, prev, pivots, used = X[keep], prev[keep], pivots[keep], used[keep]
        # rows of R send sigma to p * (unit vectors); the unused row is normal to all sigma
        RB = X[:, :, r - 1:].astype(object) @ B
        unused = np.argmin(used, axis=1) if r > 1 else np.zeros(len(keep), dtype=np.int64)
        ii = np.arange(len(keep))
        sgn = np.array([1 if p > 0 else -1 for p in prev], dtype=object)
        G = RB[ii[:, None], pivots, :] * sgn[:, None, None]  # (L', r-1, m)
        D = RB[ii, unused, :]  # (L', m)
        out = _Chunk()
        out.ids = keep + start
        out.G_obj, out.D_obj = G, D
        gmax = max((abs(int(x)) for x in G.flat), default=0)
        dmax = max((abs(int(x)) for x in D.flat), default=0)
        out.fast = 4 * dmax * gmax * WEIGHT_RANGE * m + 1 < _INT64_SAFE
        wdtype = np.int64 if out.fast else object
        out.G, out.D = G.astype(wdtype), D.astype(wdtype)
        return out

    def _chunks(self):
        if self._cache is not None:
            yield from self._cache
            return
        cache, start = [], 0
        it = self.matroid.iter_maximal_chain_masks()
        while True:
            batch = list(islice(it, self.CHUNK_SIZE))
            if not batch:
                break
            chunk = self._eliminate(batch, start)
            start += len(batch)
            if cache is not None:
                cache.append(chunk)
                if start > self.CACHE_LIMIT:
                    cache = None
            yield chunk
        if cache is not None:
            self._cache = cache

    # -- evaluation -----------------------------------------------------
    def _zero(self, status, w=()) -> RayShootResult:
        return RayShootResult(
            tuple(w), tuple([0] * self.m), tuple(0 for _ in self.blocks), status=status
        )

    def shoot(self, w: Sequence[int]) -> RayShootResult:
        """Exponent vector of the initial monomial for weight w.

        Raises DegenerateWeightError when some Cramer coordinate vanishes.
        """
        w = tuple(int(x) for x in w)
        if len(w) != self.m:
            raise ValueError(f"weight has length {len(w)}, expected {self.m}")
        if self.status != "ok":
            return self._zero(self.status, w)
        small = max(abs(x) for x in w) <= WEIGHT_RANGE
        exps = [0] * self.m
        contribs = []
        for ch in self._chunks():
            if ch.fast and small:
                G, D = ch.G, ch.D
                wv = np.array(w, dtype=np.int64)
            else:
                G, D = ch.G_obj, ch.D_obj
                wv = np.array(w, dtype=object)
            Gw = G @ wv  # (L, r-1)
            N = D @ wv  # (L,)
            nz = D != 0
            # the Cramer coordinate of -b_i has the sign of -N/D_i
            if np.any((N == 0)[:, None] & nz):
                raise DegenerateWeightError("a Cramer coordinate vanished for this weight")
            # the coordinate of sigma_k has the sign of |N| G_ki + |D_i| Gw_k
            lam = np.abs(N)[:, None, None] * G + np.abs(D)[:, None, :] * Gw[:, :, None]
            if np.any((lam == 0) & nz[:, None, :]):
                raise DegenerateWeightError("a Cramer coordinate vanished for this weight")
            hit = nz & ((N[:, None] * D) < 0) & np.all(lam > 0, axis=1)
            for c, i in zip(*np.nonzero(hit)):
                val = self.scale * int(D[c, i])
                if val.denominator != 1:
                    raise InstabilityError("non-integral chain contribution: report bug")
                v = abs(int(val))
                exps[i] += v
                contribs.append((int(ch.ids[c]), int(i), v))
        block_deg = tuple(sum(exps[i] for i in blk) for blk in self.blocks)
        return RayShootResult(w, tuple(exps), block_deg, tuple(contribs))

    def shoot_generic(self, seed: int, retries: int = MAX_RETRIES) -> RayShootResult:
        for k in range(retries + 1):
            cert = generic_weight(self.m, seed, k)
            try:
                res = self.shoot(cert.w)
            except DegenerateWeightError:
                continue
            return replace(res, retries=k)
        raise GenericityError(
            f"genericity failure: no generic weight after {retries} retries (seed {seed})"
        )

    def chain(self, index: int) -> tuple[int, ...]:
        return next(islice(self.matroid.iter_maximal_chain_masks(), index, None))

    def direct_contribution(self, chain_index: int, i: int) -> int:
        """|det(A^T, e_J1, ..., e_i)| straight from the m x m matrix (for checking)."""
        ch = self.chain(chain_index)
        M = [
            [row[j] for row in self.A] + [F >> j & 1 for F in ch] + [int(j == i)]
            for j in range(self.m)
        ]
        return abs(det(M))


def ray_shoot(A, blocks, w, force: bool = False) -> RayShootResult:
    return RayShooter(A, blocks, force=force).shoot(w)


def tropical_degree(
    sys: CayleySystem, seed: int = 0, force: bool = False, n_seeds: int = 3
) -> TropicalDegree:
    """Cycle multidegree, checked for agreement across independent seeds."""
    nb = len(sys.blocks)
    if sys.degenerate:
        return TropicalDegree(tuple([0] * nb), 0, True, "degenerate")
    shooter = RayShooter(sys.matrix, sys.blocks, force=force)
    if shooter.status != "ok":
        return TropicalDegree(tuple([0] * nb), sys.lattice_index, True, shooter.status)
    seeds = tuple(seed + k for k in range(n_seeds))
    runs = tuple(shooter.shoot_generic(s) for s in seeds)
    degs = {r.block_degrees for r in runs}
    if len(degs) != 1:
        raise InstabilityError(f"instability: report bug (seeds {seeds} gave {sorted(degs)})")
    cycle = runs[0].block_degrees
    defective = not any(cycle)
    return TropicalDegree(
        cycle, sys.lattice_index, defective, "defective" if defective else "ok", seeds, runs
    )


def is_defective(sys: CayleySystem, seed: int = 0, trials: int = 5) -> tuple[bool, str]:
    """Defectiveness verdict with the method that decided it.

    Exact for rank-deficient systems, pyramids and planar pairs; otherwise
    the verdict rests on ``trials`` random weights ("monte-carlo").
    """
    from . import planar

    if sys.degenerate:
        return True, "rank-deficient"
    if sys.n == 2:
        dims = [planar.hull(c).dim for c in sys.configs]
        if dims == [2, 2]:
            return planar.planar_defective(*sys.configs)[0], "planar-exact"
        if sorted(dims) == [1, 2]:
            a1, a2 = sys.configs if dims[0] == 2 else sys.configs[::-1]
            return planar.one_dim_degree(a1, a2).defective, "planar-one-dimensional"
    shooter = RayShooter(sys.matrix, sys.blocks, force=True)
    if shooter.status != "ok":
        return True, "pyramid"
    for t in range(trials):
        if any(shooter.shoot_generic(seed + t).block_degrees):
            return False, "monte-carlo"
    return True, "monte-carlo"
