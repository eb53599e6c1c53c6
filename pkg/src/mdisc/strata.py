"""Tropical matroid strata and linear degree formulas in Plücker coordinates.

Signs refer to the matrix M(A, J, i) = (A^T, e_J1, ..., e_Jr-1, e_i) with
columns in exactly that order, chains in the depth-first order of the
matroid module and Cayley columns in input order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import sympy

from .cayley import CayleySystem, plucker, vanishing_forms
from .errors import FitError, RankDeficientError
from .lattice import det
from .matroid import DualMatroid
from .tropical import RayShooter


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def augmented_matrix(A, chain: Sequence[int], i: int) -> list[list[int]]:
    """Rows of M(A, J, i) for a chain given as flat bitmasks."""
    m = len(A[0])
    return [
        [row[j] for row in A] + [F >> j & 1 for F in chain] + [int(j == i)]
        for j in range(m)
    ]


@dataclass(frozen=True)
class StratumFingerprint:
    matroid_id: tuple[int, ...]
    m: int
    signs: tuple[tuple[int, ...], ...]  # signs[chain][i]

    def sign(self, chain_index: int, i: int) -> int:
        return self.signs[chain_index][i]


def fingerprint(sys: CayleySystem) -> StratumFingerprint:
    if sys.degenerate:
        raise RankDeficientError("rank deficient")
    M = DualMatroid.from_matrix(sys.matrix)
    signs = tuple(
        tuple(_sign(det(augmented_matrix(sys.matrix, ch, i))) for i in range(sys.m))
        for ch in M.maximal_chain_masks()
    )
    return StratumFingerprint(M.canonical_id(), sys.m, signs)


def same_stratum(a: StratumFingerprint, b: StratumFingerprint) -> bool:
    return a.m == b.m and a.matroid_id == b.matroid_id and a.signs == b.signs


def laplace_form(A, chain, i) -> dict[tuple[int, ...], int]:
    """det M(A, J, i) as a linear form in the maximal minors of A.

    Expansion along the first d columns: the coefficient of p_S is
    (-1)^(sum of 1-based rows in S + d(d+1)/2) * det(E[rows not in S]).
    """
    d, m = len(A), len(A[0])
    E = [[F >> j & 1 for F in chain] + [int(j == i)] for j in range(m)]
    base = d * (d + 1) // 2
    out = {}
    for S in combinations(range(m), d):
        rest = [j for j in range(m) if j not in S]
        minor = det([E[j] for j in rest])
        if minor:
            out[S] = (-1) ** (sum(s + 1 for s in S) + base) * minor
    return out


@dataclass(frozen=True)
class DegreeFormula:
    """A linear form in Plücker coordinates giving one block degree on a stratum."""

    block: int
    m: int
    d: int
    coefficients: dict = field(hash=False)  # column subset -> Fraction
    vanishing: tuple = field(default=(), hash=False)  # basis of forms vanishing on the stratum
    anchor: str = "certificate"

    def evaluate(self, p: dict) -> Fraction:
        return sum((c * p.get(S, 0) for S, c in self.coefficients.items()), Fraction(0))

    def __call__(self, sys: CayleySystem) -> Fraction:
        return self.evaluate(plucker(sys))


def certificate_form(sys: CayleySystem, block: int, seed: int = 0) -> dict:
    """Signed sum of the Laplace forms of the contributing (chain, column) pairs."""
    shooter = RayShooter(sys.matrix, sys.blocks, force=True)
    if shooter.status != "ok":
        return {}
    res = shooter.shoot_generic(seed)
    chains = shooter.matroid.maximal_chain_masks()
    cols = set(sys.blocks[block])
    p = plucker(sys)
    form: dict = {}
    for c, i, _ in res.contributions:
        if i not in cols:
            continue
        lf = laplace_form(sys.matrix, chains[c], i)
        s = _sign(sum(v * p.get(S, 0) for S, v in lf.items()))
        for S, v in lf.items():
            form[S] = form.get(S, 0) + s * v
    return {S: Fraction(v) for S, v in form.items() if v}


def vanishing_basis(m: int, d: int, blocks) -> list[dict]:
    """Row-reduced basis of the span of the vanishing forms."""
    subsets = list(combinations(range(m), d))
    pos = {S: k for k, S in enumerate(subsets)}
    rows = []
    for form in vanishing_forms(m, d, blocks):
        row = [0] * len(subsets)
        for S, c in form.items():
            row[pos[S]] = c
        rows.append(row)
    if not rows:
        return []
    R, piv = sympy.Matrix(rows).rref()
    out = []
    for k in range(len(piv)):
        out.append({subsets[j]: Fraction(int(x.p), int(x.q)) for j, x in enumerate(R.row(k)) if x != 0})
    return out


def fit_degree_formula(
    samples: Sequence[tuple[CayleySystem, Sequence[int]]],
    block: int,
    holdout: tuple[CayleySystem, Sequence[int]] | None = None,
    anchor: str | None = "certificate",
    check_stratum: bool = True,
) -> DegreeFormula:
    """Exact linear formula for the degree of ``block`` on one stratum.

    The representative is the anchor form plus the smallest (Euclidean norm)
    correction that reproduces every sample.  With anchor="certificate" the
    anchor is the signed ray-shooting certificate of the first sample,
    which already is a valid formula on the whole stratum; with anchor=None
    it is zero and the result is the plain minimal-norm interpolant.
    """
    if not samples:
        raise FitError("no samples")
    first = samples[0][0]
    m, d = first.m, first.d
    if any(s.m != m or s.d != d or s.blocks != first.blocks for s, _ in samples):
        raise FitError("no linear fit - check stratum (samples have different shapes)")
    if check_stratum and len(samples) > 1:
        fp = fingerprint(first)
        for s, _ in samples[1:]:
            if not same_stratum(fp, fingerprint(s)):
                raise FitError("no linear fit - check stratum (fingerprints differ)")
    subsets = list(combinations(range(m), d))
    x0 = certificate_form(first, block) if anchor == "certificate" else {}
    if anchor not in ("certificate", None):
        raise ValueError(f"unknown anchor {anchor!r}")
    P = sympy.Matrix([[plucker(s).get(S, 0) for S in subsets] for s, _ in samples])
    x0v = sympy.Matrix([sympy.Rational(x0.get(S, 0).numerator, x0.get(S, 0).denominator) for S in subsets])
    rhs = sympy.Matrix([int(deg[block]) for _, deg in samples]) - P * x0v
    gram = P * P.T
    try:
        z, params = gram.gauss_jordan_solve(rhs)
    except ValueError:
        raise FitError("no linear fit - check stratum") from None
    z = z.subs({t: 0 for t in params})
    x = x0v + P.T * z
    if P * x != sympy.Matrix([int(deg[block]) for _, deg in samples]):
        raise FitError("no linear fit - check stratum")
    coeffs = {S: Fraction(int(v.p), int(v.q)) for S, v in zip(subsets, x) if v != 0}
    formula = DegreeFormula(
        block, m, d, coeffs, tuple(vanishing_basis(m, d, first.blocks)), anchor or "none"
    )
    if holdout is not None:
        sys, deg = holdout
        got = formula(sys)
        if got != deg[block]:
            raise FitError(
                f"no linear fit - check stratum (held-out degree {deg[block]}, formula gives {got})"
            )
    return formula
