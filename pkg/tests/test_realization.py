import random

import pytest

from lieweyl import (
    InsufficientOrder,
    OpMatrix,
    Scalar,
    WeylOp,
    adjoint_matrix,
    dual_realization,
    g2_algebra,
    realization_from_phi,
    t_realization,
    verify_appendix,
    verify_realization,
    verify_shift_relations,
    verify_symmetrization,
    weyl_realization,
)
from conftest import standard_algebras


def test_g2_low_order_series():
    g = g2_algebra()
    real = weyl_realization(g, 2)
    x1, x2 = (WeylOp.x(2, mu) for mu in range(2))
    d1, d2 = (WeylOp.d(2, mu) for mu in range(2))
    half = Scalar(1) / 2
    twelfth = Scalar(1) / 12
    expect0 = x1 + (x2 * d2).scale(half) - (x2 * d1 * d2).scale(twelfth)
    expect1 = x2 - (x2 * d1).scale(half) + (x2 * d1 * d1).scale(twelfth)
    assert real.xhat[0].d_part_degree_le(2) == expect0.d_part_degree_le(2)
    assert real.xhat[1].d_part_degree_le(2) == expect1.d_part_degree_le(2)


def test_adjoint_matrix_g2():
    g = g2_algebra()
    C = adjoint_matrix(g)
    d1, d2 = (WeylOp.d(2, mu) for mu in range(2))
    assert C[0, 0].is_zero()
    assert C[0, 1] == d2
    assert C[1, 0].is_zero()
    assert C[1, 1] == -d1


def test_closure_all_algebras():
    for g in standard_algebras():
        real = weyl_realization(g, 4)
        rep = verify_realization(g, real.phi, 4)
        assert rep["pass"], (g.name, rep)


def test_dual_closure_flipped_sign():
    # the dual realization closes the bracket of the dual algebra
    from lieweyl import dual_algebra

    for g in standard_algebras():
        real = dual_realization(g, 4)
        rep = verify_realization(dual_algebra(g), real.phi, 4)
        assert rep["pass"], (g.name, rep)


def test_corrupted_phi_fails_with_witness():
    g = g2_algebra()
    phi = weyl_realization(g, 4).phi
    bad = phi + OpMatrix(
        2,
        [
            [WeylOp.d(2, 0).scale(Scalar(1) / 3), WeylOp.zero(2)],
            [WeylOp.zero(2), WeylOp.zero(2)],
        ],
    )
    rep = verify_realization(g, bad, 4)
    assert not rep["pass"]
    failing = [c for c in rep["checks"] if not c["pass"] and "witness" in c]
    assert failing and failing[0]["witness"] is not None


def test_symmetrization():
    rng = random.Random(5)
    for g in standard_algebras():
        rep = verify_symmetrization(g, 5, 4, 3, rng)
        assert rep["pass"], (g.name, rep)


def test_symmetrization_order_guard():
    with pytest.raises(InsufficientOrder):
        verify_symmetrization(g2_algebra(), 3, 5, 1, random.Random(0))


def test_shift_relations():
    for g in standard_algebras():
        rep = verify_shift_relations(g, 5)
        assert rep["pass"], (g.name, rep)


def test_t_matrices_inverse():
    for g in standard_algebras():
        T, Tinv = t_realization(g, 5)
        assert (T * Tinv).agrees_through(OpMatrix.identity(g.n), 5)
        assert (Tinv * T).agrees_through(OpMatrix.identity(g.n), 5)


def test_appendix_identities():
    for g in standard_algebras():
        rep = verify_appendix(g, 4, 4)
        assert rep["pass"], (g.name, rep)


def test_realization_from_phi_rejects_x():
    g = g2_algebra()
    phi = OpMatrix(
        2,
        [
            [WeylOp.one(2), WeylOp.x(2, 0)],
            [WeylOp.zero(2), WeylOp.one(2)],
        ],
    )
    with pytest.raises(ValueError):
        realization_from_phi(g, phi)


def test_guaranteed_order():
    real = weyl_realization(g2_algebra(), 6)
    assert real.guaranteed_order == 5
