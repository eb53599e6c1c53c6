from math import comb

import pytest

from mdisc import corpus
from mdisc.cayley import build_cayley, plucker
from mdisc.errors import FitError
from mdisc.lattice import det
from mdisc.matroid import DualMatroid
from mdisc.strata import (
    augmented_matrix,
    certificate_form,
    fingerprint,
    fit_degree_formula,
    laplace_form,
    same_stratum,
    vanishing_basis,
)
from mdisc.tropical import tropical_degree


def triangles(d1, d2):
    return build_cayley([corpus.simplex(d1), corpus.simplex(d2)])


def trinomial(p, q, r):
    s = build_cayley(corpus.trinomials(p, q, r))
    return s, tuple(tropical_degree(s).cycle)


@pytest.mark.parametrize("configs", [
    [corpus.unit_square(), corpus.QUADRILATERAL],
    corpus.trinomials(2, 3, 4),
])
def test_laplace_form_reproduces_determinant(configs):
    s = build_cayley(configs)
    p = plucker(s)
    chains = DualMatroid.from_matrix(s.matrix).maximal_chain_masks()
    for ch in chains[:25]:
        for i in range(s.m):
            lf = laplace_form(s.matrix, ch, i)
            assert sum(c * p.get(S, 0) for S, c in lf.items()) == det(augmented_matrix(s.matrix, ch, i))


def test_sparse_triangle_determinants():
    d1, d2 = 5, 2
    s = triangles(d1, d2)
    chains = DualMatroid.from_matrix(s.matrix).maximal_chain_masks()
    vals = {abs(det(augmented_matrix(s.matrix, ch, i))) for ch in chains for i in range(s.m)}
    assert vals == {0, d1 * (d1 - d2), d2 * (d1 - d2)}


def test_translation_keeps_fingerprint():
    base = corpus.trinomials(2, 3, 4)
    moved = [[tuple(x + t for x, t in zip(p, shift)) for p in blk] for blk, shift in zip(base, [(1, 0, 2), (0, -3, 1), (4, 4, 4)])]
    a, b = build_cayley(base), build_cayley(moved)
    assert plucker(a) == plucker(b)
    assert same_stratum(fingerprint(a), fingerprint(b))


def test_families_separate():
    assert same_stratum(fingerprint(triangles(3, 2)), fingerprint(triangles(9, 4)))
    assert same_stratum(fingerprint(triangles(3, -2)), fingerprint(triangles(9, -4)))
    assert not same_stratum(fingerprint(triangles(3, 2)), fingerprint(triangles(3, -2)))
    # different sizes never share a stratum
    assert not same_stratum(fingerprint(triangles(3, 2)), fingerprint(build_cayley(corpus.trinomials(2, 3, 4))))


def test_certificate_is_valid_on_the_whole_stratum():
    samples = [trinomial(*pqr) for pqr in ((2, 3, 4), (2, 3, 5), (2, 4, 5), (3, 4, 5), (2, 3, 7))]
    for block in range(3):
        form = certificate_form(samples[0][0], block)
        for s, deg in samples:
            assert sum(c * plucker(s).get(S, 0) for S, c in form.items()) == deg[block]


def test_vanishing_dimension():
    s = build_cayley(corpus.trinomials(2, 3, 4))
    assert len(vanishing_basis(s.m, s.d, s.blocks)) == comb(s.m, s.d) - comb(s.m - s.n, s.d - s.n)


def test_fit_on_triangle_family():
    samples = [(triangles(d1, d2), (d2 * d2 + 2 * d1 * d2 - 3 * d2 * d2, d1 * d1 + 2 * d1 * d2 - 3 * d1 * d2))
               for d1, d2 in ((3, 2), (5, 2), (5, 3), (4, 1))]
    held = triangles(7, 3)
    for block in range(2):
        f = fit_degree_formula(samples, block, holdout=(held, tropical_degree(held).cycle))
        assert f(held) == tropical_degree(held).cycle[block]


def test_minimal_norm_fit_still_interpolates():
    samples = [trinomial(*pqr) for pqr in ((2, 3, 4), (2, 3, 5), (2, 4, 5), (3, 4, 5))]
    f = fit_degree_formula(samples, 0, anchor=None)
    assert all(f(s) == deg[0] for s, deg in samples)
    assert f.anchor == "none"


def test_fit_rejects_mixed_strata():
    samples = [(triangles(3, 2), (4, 3)), (triangles(3, -2), (10, 15))]
    with pytest.raises(FitError, match="check stratum"):
        fit_degree_formula(samples, 0)
    with pytest.raises(FitError, match="check stratum"):
        fit_degree_formula([(triangles(3, 2), (4, 3)), trinomial(2, 3, 4)], 0)
    with pytest.raises(FitError):
        fit_degree_formula([], 0)


def test_wrong_holdout_is_reported():
    samples = [trinomial(*pqr) for pqr in ((2, 3, 4), (2, 3, 5), (2, 4, 5), (3, 4, 5))]
    s, deg = trinomial(2, 3, 7)
    with pytest.raises(FitError, match="held-out"):
        fit_degree_formula(samples, 0, holdout=(s, (deg[0] + 1, deg[1], deg[2])))
