"""Weyl algebra, quadratic co-moment, vector fields, oscillator module."""

import itertools
import random
from fractions import Fraction

import pytest

from spnil.field import FieldScalar, HALF, ONE, fs
from spnil.splie import MatF, RootDatumC, bracket, sp_basis, sp_dim
from spnil.weylosc import (
    OscVector,
    WeylElement,
    classical_comoment,
    osc_apply,
    symmetrize_quadratic,
    theta0,
    theta1,
    v_registry,
    weight_zero_scalar,
)


def test_normal_ordering_relation():
    x = WeylElement.xgen(1, 0)
    y = WeylElement.ygen(1, 0)
    assert (x * y).terms == {((1,), (1,)): ONE}
    # y x reorders to x y + 1
    assert y * x == x * y + WeylElement.one(1)
    assert x.commutator(y) == WeylElement.one(1).scale(fs(-1))


def test_theta1_rank_one_table():
    h, e, f = sp_basis(1)
    x = WeylElement.xgen(1, 0)
    y = WeylElement.ygen(1, 0)
    assert theta1(h) == x * y + WeylElement.constant(1, HALF)
    assert theta1(e) == (x * x).scale(HALF)
    assert theta1(f) == (y * y).scale(-HALF)
    # the commutator of the two parabolas recovers the diagonal image
    assert theta1(e).commutator(theta1(f)) == theta1(bracket(e, f))
    assert bracket(e, f).entries == h.entries


def test_theta1_is_a_lie_homomorphism():
    for n in (1, 2):
        basis = sp_basis(n)
        images = [theta1(b) for b in basis]
        for (a, ta), (b, tb) in itertools.combinations(zip(basis, images), 2):
            assert ta.commutator(tb) == theta1(bracket(a, b))


def test_theta1_images_are_even_quadratics():
    for n in (1, 2):
        for b in sp_basis(n):
            t = theta1(b)
            assert t.is_even()
            assert t.order() <= 2
            assert t.total_degree() <= 2


def test_theta1_agrees_with_symmetrized_classical_comoment():
    rng = random.Random(601)
    for n in (1, 2):
        basis = sp_basis(n)
        for b in basis:
            assert symmetrize_quadratic(classical_comoment(b)) == theta1(b)
        # also on a few random sp elements, by linearity of both routes
        for _ in range(3):
            m = MatF.zero(2 * n)
            for b in basis:
                m = m + b.scale(fs(Fraction(rng.randint(-2, 2))))
            assert symmetrize_quadratic(classical_comoment(m)) == theta1(m)


def test_classical_comoment_shape():
    n = 2
    reg = v_registry(n)
    assert len(reg) == 2 * n
    for b in sp_basis(n):
        p = classical_comoment(b)
        assert p.registry == reg
        assert p.is_zero() or (p.is_homogeneous() and p.total_degree() == 2)


def test_theta0_is_a_lie_homomorphism():
    for n in (1, 2):
        basis = sp_basis(n)
        images = [theta0(b) for b in basis]
        for (a, ta), (b, tb) in itertools.combinations(zip(basis, images), 2):
            assert ta.commutator(tb) == theta0(bracket(a, b))
        assert theta0(MatF.zero(2 * n)).mat == [
            [FieldScalar(0)] * sp_dim(n) for _ in range(sp_dim(n))]


def test_theta0_moves_root_coordinates_by_their_weight():
    from spnil.poly import MultiPoly

    n = 1
    h, e, f = sp_basis(n)
    reg = ("gh", "ge", "gf")
    field = theta0(h)
    # basis order is (h, e, f): labels move by b -> [h, b]
    ve = MultiPoly.variable(reg, 1)
    vf = MultiPoly.variable(reg, 2)
    vh = MultiPoly.variable(reg, 0)
    assert field.apply(ve) == ve.scale(fs(2))
    assert field.apply(vf) == vf.scale(fs(-2))
    assert field.apply(vh).is_zero()
    # derivation property on a product
    p = ve * vf + vh * vh
    assert field.apply(p).is_zero()


def test_osc_vector_validation_and_vacuum():
    with pytest.raises(ValueError, match="odd"):
        OscVector(1, {(2,): ONE})
    with pytest.raises(ValueError, match="width"):
        OscVector(2, {(1,): ONE})
    vac = OscVector.vacuum(2)
    assert vac.terms == {(-1, -1): ONE}
    assert not vac.is_zero()
    assert (vac - vac).is_zero()


def test_osc_apply_cartan_weights():
    # theta1(H_i) acts on a monomial with doubled exponent e by (e + 1)/2
    for n in (1, 2):
        basis = sp_basis(n)
        vac = OscVector.vacuum(n)
        for i in range(n):
            h = theta1(basis[i])
            assert osc_apply(h, vac).is_zero()
            exp = tuple(5 if j == i else -1 for j in range(n))
            st = OscVector(n, {exp: ONE})
            assert osc_apply(h, st) == st.scale(fs(3))


def test_osc_apply_raising_from_vacuum():
    vac = OscVector.vacuum(1)
    datum = RootDatumC(1)
    e = datum.positive_roots[0].vec
    up = osc_apply(theta1(e), vac)
    # 1/2 x^2 on x^(-1/2) gives 1/2 x^(3/2)
    assert up.terms == {(3,): HALF}


def test_weight_zero_scalar_matches_vacuum_action():
    for n in (1, 2, 3):
        datum = RootDatumC(n)
        vac = OscVector.vacuum(n)
        for r in datum.positive_roots:
            want = fs(Fraction(-3, 16)) if r.length == "long" else fs(Fraction(-1, 8))
            assert weight_zero_scalar(n, r) == want
            prod = theta1(r.vec) * theta1(datum.opposite(r).vec)
            assert osc_apply(prod, vac) == vac.scale(want)
