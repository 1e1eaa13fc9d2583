import pytest

from matrixweyl import Coeff, check_canonical, gl2_irrep
from helpers_mw import C


def test_dim_one_is_trivial():
    rep = gl2_irrep(1)
    for key in ((1, 1), (1, 2), (2, 1), (2, 2)):
        assert rep.block(*key) == [[Coeff.zero()]]


def test_dim_two_matches_display():
    rep = gl2_irrep(2)
    assert rep.block(1, 1) == [[C(1), C(0)], [C(0), C(0)]]
    assert rep.block(2, 2) == [[C(0), C(0)], [C(0), C(1)]]
    assert rep.block(1, 2) == [[C(0), C(1)], [C(0), C(0)]]
    assert rep.block(2, 1) == [[C(0), C(0)], [C(1), C(0)]]


def test_dim_three_matches_display():
    rep = gl2_irrep(3)
    s2 = Coeff.sqrt2()
    z = Coeff.zero()
    assert rep.block(1, 1) == [[C(2), z, z], [z, C(1), z], [z, z, C(0)]]
    assert rep.block(2, 2) == [[C(0), z, z], [z, C(1), z], [z, z, C(2)]]
    assert rep.block(1, 2) == [[z, s2, z], [z, z, s2], [z, z, z]]
    assert rep.block(2, 1) == [[z, z, z], [s2, z, z], [z, s2, z]]


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_canonical_relations_hold(d):
    assert check_canonical(gl2_irrep(d)).passed


def test_corrupted_entry_fails_with_offending_pair():
    rep = gl2_irrep(2).replaced(1, 2, 0, 1, 2)  # M12 upper entry 1 -> 2
    report = check_canonical(rep)
    assert not report.passed
    pairs = {(p, q) for p, q, _ in report.failures}
    assert ((1, 2), (2, 1)) in pairs


def test_zero_dim_rejected():
    with pytest.raises(ValueError):
        gl2_irrep(0)


def test_constructor_validates():
    blocks = {
        (1, 1): [[C(1), C(0)], [C(0), C(0)]],
        (2, 2): [[C(0), C(0)], [C(0), C(1)]],
        (1, 2): [[C(0), C(2)], [C(0), C(0)]],
        (2, 1): [[C(0), C(0)], [C(1), C(0)]],
    }
    from matrixweyl import MatrixRep

    with pytest.raises(ValueError, match="canonical"):
        MatrixRep(2, 2, blocks)
    MatrixRep(2, 2, blocks, validate=False)  # negative-control path stays open
