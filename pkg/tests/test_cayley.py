import pytest

from mdisc import corpus
from mdisc.cayley import PointConfig, build_cayley, in_mixed_grassmannian, plucker, vanishing_forms
from mdisc.errors import DimensionMismatchError


def test_matrix_layout():
    s = build_cayley([[(0, 0), (1, 0)], [(0, 1), (2, 3), (1, 1)]])
    assert s.matrix == (
        (1, 1, 0, 0, 0),
        (0, 0, 1, 1, 1),
        (0, 1, 0, 2, 1),
        (0, 0, 1, 3, 1),
    )
    assert s.blocks == ((0, 1), (2, 3, 4))
    assert (s.n, s.m, s.d, s.codim) == (2, 5, 4, 1)
    assert s.block_of(3) == 1
    with pytest.raises(IndexError):
        s.block_of(7)


def test_lattice_index():
    assert build_cayley([corpus.unit_square()] * 2).lattice_index == 1
    assert build_cayley([corpus.simplex(2), corpus.simplex(-2)]).lattice_index == 4
    assert build_cayley([corpus.simplex(2), corpus.simplex(3)]).lattice_index == 1
    assert build_cayley([corpus.simplex(6), corpus.simplex(-4)]).lattice_index == 4


def test_degenerate_system_is_flagged():
    s = build_cayley([[(0, 0), (1, 0)], [(0, 0), (2, 0)]])
    assert s.degenerate and s.lattice_index == 0


def test_duplicate_points_rejected():
    with pytest.raises(ValueError, match="duplicate point"):
        PointConfig(((0, 0), (0, 0)))


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        build_cayley([[(0, 0, 0), (1, 0, 0)], [(0, 0), (1, 1)]])
    with pytest.raises(DimensionMismatchError):
        PointConfig(((0, 0), (1,)))


def test_config_operations():
    c = PointConfig(((0, 0), (1, 0), (0, 1)), "A")
    assert c.translate((2, 3)).points == ((2, 3), (3, 3), (2, 4))
    assert c.transform([[1, 1], [0, 1]]).points == ((0, 0), (1, 0), (1, 1))
    assert c.without((1, 0)).points == ((0, 0), (0, 1))
    assert len(c) == 3 and c.dim == 2


@pytest.mark.parametrize(
    "configs",
    [
        [corpus.unit_square(), corpus.QUADRILATERAL],
        [corpus.simplex(2), corpus.simplex(-3)],
        corpus.trinomials(2, 3, 4),
    ],
)
def test_plucker_vector_lies_in_mixed_grassmannian(configs):
    s = build_cayley(configs)
    p = plucker(s)
    assert in_mixed_grassmannian(p, s.m, s.d, s.blocks)
    # a generic perturbation of one coordinate leaves it
    S = next(iter(k for k, v in p.items() if v))
    q = dict(p)
    q[S] += 1
    assert not in_mixed_grassmannian(q, s.m, s.d, s.blocks)


def test_vanishing_forms_shape():
    forms = vanishing_forms(4, 3, [(0, 1), (2, 3)])
    assert forms and all(set(c for c in f.values()) <= {1, -1} for f in forms)
