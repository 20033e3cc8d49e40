"""Scheme-level checks: ideals, moment equation, sampled points, tangents,
the half-dimensional stratum frame, the linear embedding, Hilbert rows."""

import random

import pytest

from spnil.field import FieldScalar, fs
from spnil.linalg import dense_rank
from spnil.orbits import census, nilpotent_rep, partitions_spn
from spnil.splie import MatF, is_nilpotent, omega_matrix, sp_basis, sp_dim
from spnil.varieties import (
    SchemePoint,
    embedding_pullback_check,
    full_registry,
    hilbert_compare,
    ideal_generators,
    lagrangian_check,
    moment2,
    odd_char_coeffs_vanish,
    point_coordinates,
    positive_weight_space,
    sample_xnil_point,
    stratum_tangent_check,
    theta1_kills_minors,
    unipotent_factors,
)

ZERO = FieldScalar(0)


def origin(n):
    return SchemePoint(n, MatF.zero(2 * n), MatF.zero(2 * n), [ZERO] * (2 * n))


def test_full_registry_shape():
    for n in (1, 2, 3):
        reg = full_registry(n)
        assert len(reg) == 2 * sp_dim(n) + 2 * n
        assert reg[0] == "x0"
        assert reg[sp_dim(n)] == "y0"
        assert reg[2 * sp_dim(n)] == "i0"
        pt = sample_xnil_point(partitions_spn(n)[0], seed=0)
        assert len(point_coordinates(pt)) == len(reg)


def test_ideal_generator_census():
    # counts, degrees, registries are all frozen
    frozen = {
        (1, "I"): (3, {2}), (1, "J"): (1, {4}), (1, "K"): (1, {2}),
        (1, "NIL"): (1, {2}),
        (2, "I"): (10, {2}), (2, "J"): (36, {4}), (2, "K"): (36, {2}),
        (2, "NIL"): (2, {2, 4}),
    }
    for (n, kind), (count, degs) in frozen.items():
        gens = ideal_generators(kind, n)
        assert len(gens) == count
        assert {g.total_degree() for g in gens} == degs
        assert all(g.is_homogeneous() and not g.is_zero() for g in gens)
    assert ideal_generators("I", 1)[0].registry == full_registry(1)
    assert ideal_generators("J", 1)[0].registry == ("x0", "x1", "x2",
                                                    "y0", "y1", "y2")
    assert ideal_generators("K", 1)[0].registry == ("x0", "x1", "x2")
    assert ideal_generators("NIL", 1)[0].registry == ("y0", "y1", "y2")
    with pytest.raises(ValueError):
        ideal_generators("Q", 1)


def test_moment2_zero_exactly_on_scheme():
    assert moment2(origin(1)).is_zero()
    assert moment2(origin(2)).is_zero()
    h = sp_basis(1)[0]
    off = SchemePoint(1, h, MatF.zero(2), [fs(1), ZERO])
    # x commutes with y = 0 but i^2 does not vanish
    assert not moment2(off).is_zero()


def test_moment2_equivariance_under_unipotents():
    rng = random.Random(701)
    n = 2
    basis = sp_basis(n)

    def rand_sp():
        m = MatF.zero(2 * n)
        for b in basis:
            m = m + b.scale(fs(rng.randint(-2, 2)))
        return m

    for _ in range(4):
        pt = SchemePoint(n, rand_sp(), rand_sp(),
                         [fs(rng.randint(-2, 2)) for _ in range(2 * n)])
        base = moment2(pt)
        for g, ginv in unipotent_factors(n, rng):
            moved = SchemePoint(n, g @ pt.x @ ginv, g @ pt.y @ ginv,
                                g.apply(list(pt.i)))
            assert (moment2(moved) - g @ base @ ginv).is_zero()


def jordan_type(m):
    ranks = [m.size]
    power = m
    while True:
        r = dense_rank([list(row) for row in power.entries])
        ranks.append(r)
        if r == 0:
            break
        power = power @ m
    drops = [ranks[j] - ranks[j + 1] for j in range(len(ranks) - 1)]
    parts = []
    for j, c in enumerate(drops):
        nxt = drops[j + 1] if j + 1 < len(drops) else 0
        parts.extend([j + 1] * (c - nxt))
    return tuple(sorted(parts, reverse=True))


def test_sampled_points_lie_on_the_nilpotent_scheme():
    for n in (1, 2):
        nil = ideal_generators("NIL", n)
        full = ideal_generators("I", n)
        for lam in partitions_spn(n):
            for seed in (0, 1, 2):
                pt = sample_xnil_point(lam, seed=seed)
                assert moment2(pt).is_zero()
                assert is_nilpotent(pt.y)
                assert jordan_type(pt.y) == lam
                coords = point_coordinates(pt)
                assert all(g.eval(coords).is_zero() for g in full)
                ycoords = coords[sp_dim(n):2 * sp_dim(n)]
                assert all(g.eval(ycoords).is_zero() for g in nil)


def test_sampled_points_are_deterministic_per_seed():
    for lam in [(2,), (4,), (2, 2)]:
        assert sample_xnil_point(lam, seed=3) == sample_xnil_point(lam, seed=3)
        assert sample_xnil_point(lam, seed=3) != sample_xnil_point(lam, seed=4)


def test_lagrangian_check_at_origin():
    rep = lagrangian_check(origin(1))
    assert rep.jacobian_rank == 0
    assert rep.tangent_dim == 8
    assert rep.smooth is False
    # kernel is the whole space, which the symplectic form does not kill
    assert rep.isotropic is False


def test_lagrangian_check_at_regular_semisimple_x():
    h = sp_basis(1)[0]
    rep = lagrangian_check(SchemePoint(1, h, MatF.zero(2), [ZERO, ZERO]))
    assert rep.jacobian_rank == 2
    assert rep.tangent_dim == 6
    h2 = sp_basis(2)[0] + sp_basis(2)[1].scale(fs(2))
    rep2 = lagrangian_check(SchemePoint(2, h2, MatF.zero(4), [ZERO] * 4))
    assert rep2.jacobian_rank == 8
    assert rep2.tangent_dim == 16


def test_tangent_rank_regression_at_sampled_points():
    # the defining equations never reach full rank 2n^2 + 2n at these points;
    # the deficit is the number of Jordan blocks of y, and the oversized
    # kernel is why the isotropy flag stays off
    for seed in range(5):
        rep = lagrangian_check(sample_xnil_point((2,), seed=seed))
        assert rep.jacobian_rank == 3
        assert rep.tangent_dim == 5
        assert rep.smooth is False
        assert rep.isotropic is False
    for seed in range(5):
        rep = lagrangian_check(sample_xnil_point((4,), seed=seed))
        assert rep.jacobian_rank in (10, 11)
        assert rep.smooth is False
        assert rep.isotropic is False
    for seed in range(3):
        rep = lagrangian_check(sample_xnil_point((2, 2), seed=seed))
        assert rep.jacobian_rank == 10
        assert rep.smooth is False
        assert rep.isotropic is False


def test_stratum_frame_is_half_dimensional_and_isotropic():
    for n in (1, 2):
        by_type = {row.partition: row for row in census(n)}
        for lam in partitions_spn(n):
            pt = sample_xnil_point(lam, seed=2)
            rep = stratum_tangent_check(pt)
            assert rep.frame_rank == sp_dim(n) + by_type[lam].vplus_dim
            assert rep.inside_kernel is True
            assert rep.isotropic is True
            if by_type[lam].is_component:
                assert rep.frame_rank == 2 * n * n + 2 * n


def test_positive_weight_space_dimensions_match_census():
    rng = random.Random(702)
    for n in (1, 2):
        for row in census(n):
            y = nilpotent_rep(row.partition)
            basis = positive_weight_space(y)
            assert len(basis) == row.vplus_dim
            if basis:
                assert dense_rank(basis) == len(basis)
                # stable under y, which raises the grading
                moved = [y.apply(list(v)) for v in basis]
                assert dense_rank(basis + moved) == len(basis)
            # the space transported by a unipotent conjugation
            for g, ginv in unipotent_factors(n, rng, count=1):
                conj = positive_weight_space(g @ y @ ginv)
                assert len(conj) == row.vplus_dim
                pushed = [g.apply(list(v)) for v in basis]
                if basis:
                    assert dense_rank(conj + pushed) == len(conj)


def test_embedding_pullback():
    assert embedding_pullback_check(1)
    assert embedding_pullback_check(2)


def test_odd_characteristic_coefficients_vanish():
    assert odd_char_coeffs_vanish(1)
    assert odd_char_coeffs_vanish(2)
    assert odd_char_coeffs_vanish(3)


def test_quadratic_comoment_kills_minors():
    assert theta1_kills_minors(1)
    assert theta1_kills_minors(2)


def test_unipotent_factors_are_symplectic_inverses():
    rng = random.Random(703)
    for n in (1, 2):
        j = omega_matrix(n)
        for g, ginv in unipotent_factors(n, rng, count=4):
            assert (g @ ginv - MatF.identity(2 * n)).is_zero()
            assert (g.transpose() @ j @ g - j).is_zero()
            assert is_nilpotent(g - MatF.identity(2 * n))


def test_hilbert_rows_frozen():
    rows = hilbert_compare(1, 6)
    assert [r.degree for r in rows] == list(range(7))
    assert [r.dim_left for r in rows] == [1, 6, 21, 56, 125, 246, 441]
    assert all(r.dim_left == r.dim_right and r.equal for r in rows)


def test_hilbert_compare_guards():
    with pytest.raises(ValueError, match="n = 1"):
        hilbert_compare(2, 3)
    with pytest.raises(ValueError, match="0..8"):
        hilbert_compare(1, 9)
