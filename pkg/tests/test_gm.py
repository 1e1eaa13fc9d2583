import json
import os
from fractions import Fraction

import pytest

from matrixweyl import (
    Coeff,
    K,
    MatrixDiffOp,
    RepSpec,
    ScalarDiffOp,
    build_gl_np1,
    build_gm,
    gl2_irrep,
    gm_commutator_tower,
)
from matrixweyl.identities import (
    g1_matches_gl3,
    gm_closure_check,
    gm_tower_constants,
    gm_tower_reports,
)

GOLDEN = os.path.join(os.path.dirname(__file__), "goldens")


def x():
    return ScalarDiffOp.x(0, 2)


def y():
    return ScalarDiffOp.x(1, 2)


def dx():
    return ScalarDiffOp.d(0, 2)


def dy():
    return ScalarDiffOp.d(1, 2)


def test_m1_towers_match_display():
    gm = build_gm(1, K)
    S = lambda op: MatrixDiffOp.from_scalar(op, 1)
    assert gm.U[0] == S(y() * dx())
    j0 = x() * dx() + y() * dy() - ScalarDiffOp.constant(K, 2)
    assert gm.U[1] == S(y() * j0)
    assert gm.Tminus[0] == S(dy())
    assert gm.Tminus[1] == S(x() * dy())
    assert gm.J12 == S(dx())
    assert gm.J11 == S(-(x() * dx()) + ScalarDiffOp.constant(K * Fraction(1, 3), 2))
    assert gm.J0 == S(j0)


def test_m2_u2_strips_all_dx():
    gm = build_gm(2, K)
    # U2 = y J0 (J0 + 1) with no d_x factors left
    j0 = x() * dx() + (y() * dy()) * 2 - ScalarDiffOp.constant(K, 2)
    expected = y() * j0 * (j0 + 1)
    assert gm.U[2] == MatrixDiffOp.from_scalar(expected, 1)
    assert gm.U[0] == MatrixDiffOp.from_scalar(y() * dx() * dx(), 1)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_towers_commute_and_nilpotency(m):
    gm = build_gm(m, K)
    for r in gm_tower_reports(gm):
        assert r.passed, r.name
    tower = gm_commutator_tower(gm)
    assert tower[m + 1].is_zero()


@pytest.mark.parametrize("m", [1, 2, 3])
def test_commutator_tower_proportional_to_closed_forms(m):
    gm = build_gm(m, K)
    consts = gm_tower_constants(gm)
    assert all(c is not None for c in consts)
    # the observed normalization is the falling factorial m!/(m-i)!
    expected = []
    acc = 1
    for i in range(1, m + 1):
        acc *= m - i + 1
        expected.append(Fraction(acc))
    assert consts == expected
    with open(os.path.join(GOLDEN, "gm_tower_constants.json")) as fh:
        golden = json.load(fh)
    assert [str(c) for c in consts] == golden["m=%d" % m]


@pytest.mark.parametrize("m", [1, 2, 3])
def test_closure_within_degree_m_for_trivial_block(m):
    report = gm_closure_check(build_gm(m, K))
    assert report.closed
    assert report.max_degree <= m


def test_closure_fails_for_matrix_blocks():
    # the displayed towers do not close over the Cartan part once the
    # matrix blocks are nontrivial; the checker reports, it does not raise
    for m in (1, 2):
        report = gm_closure_check(build_gm(m, K, gl2_irrep(2)))
        assert not report.closed


def test_g1_span_equals_scalar_gl3():
    gm = build_gm(1, K)
    gl3 = build_gl_np1(RepSpec.gl3(K, 1))
    equal, dim_gm, dim_gl3 = g1_matches_gl3(gm, gl3)
    assert equal
    assert dim_gm == dim_gl3 == 9


def test_gm_invariant_triangle():
    # every generator preserves the triangle x^p1 y^p2, p1 + m p2 <= k
    from matrixweyl.spaces import matrix_of, scalar_basis

    for m in (1, 2, 3):
        for k in range(0, 7):
            basis = scalar_basis(k, m)
            gm = build_gm(m, Coeff.rational(k))
            for name, op in gm.named():
                matrix_of(op, basis)  # raises if the triangle is not preserved


def test_build_gm_validates_m():
    with pytest.raises(ValueError):
        build_gm(0, K)
