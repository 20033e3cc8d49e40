"""Exact linear algebra: dense elimination and the sparse graded reducer."""

import random
from fractions import Fraction

import pytest

from spnil.field import FieldScalar, ONE, SQRT2, fs
from spnil.linalg import (
    dense_rank,
    inverse,
    nullspace,
    solve,
    sparse_rank,
    truncated_ideal_dim,
)
from spnil.poly import MultiPoly, count_monomials

ZERO = FieldScalar(0)


def rand_mat(rng, rows, cols, with_root=False):
    out = []
    for _ in range(rows):
        row = []
        for _ in range(cols):
            a = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
            b = Fraction(rng.randint(-2, 2)) if with_root else Fraction(0)
            row.append(fs(a, b))
        out.append(row)
    return out


def mat_vec(mat, vec):
    return [sum((r * v for r, v in zip(row, vec)), ZERO) for row in mat]


def test_dense_rank_known_matrices():
    ident = [[fs(1 if i == j else 0) for j in range(3)] for i in range(3)]
    assert dense_rank(ident) == 3
    assert dense_rank([[ZERO, ZERO], [ZERO, ZERO]]) == 0
    # outer product has rank one
    u = [fs(1), fs(2), fs(-3)]
    outer = [[a * b for b in u] for a in u]
    assert dense_rank(outer) == 1
    # a sqrt2 multiple of a row adds nothing
    row = [ONE, SQRT2, fs(3)]
    assert dense_rank([row, [SQRT2 * v for v in row]]) == 1
    assert dense_rank([]) == 0


def test_solve_recovers_a_solution():
    rng = random.Random(401)
    for _ in range(25):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        a = rand_mat(rng, rows, cols, with_root=True)
        x = [fs(Fraction(rng.randint(-3, 3), rng.randint(1, 2))) for _ in range(cols)]
        b = mat_vec(a, x)
        s = solve(a, b)
        assert s is not None
        assert mat_vec(a, s) == b


def test_solve_detects_inconsistency():
    a = [[fs(1), fs(2)], [fs(2), fs(4)]]
    assert solve(a, [fs(1), fs(3)]) is None
    assert solve(a, [fs(1), fs(2)]) is not None


def test_nullspace_vectors_are_killed_and_count_matches():
    rng = random.Random(402)
    for _ in range(25):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 5)
        a = rand_mat(rng, rows, cols)
        basis = nullspace(a)
        for v in basis:
            assert mat_vec(a, v) == [ZERO] * rows
        assert dense_rank(a) + len(basis) == cols
        if basis:
            assert dense_rank(basis) == len(basis)


def test_inverse_round_trip_and_singular_rejection():
    rng = random.Random(403)
    for _ in range(10):
        n = rng.randint(1, 4)
        # unit lower times unit upper is always invertible
        low = [[fs(1 if i == j else (rng.randint(-2, 2) if i > j else 0))
                for j in range(n)] for i in range(n)]
        up = [[fs(1 if i == j else (rng.randint(-2, 2) if i < j else 0))
               for j in range(n)] for i in range(n)]
        a = [[sum((low[i][k] * up[k][j] for k in range(n)), ZERO)
              for j in range(n)] for i in range(n)]
        ainv = inverse(a)
        prod = [[sum((a[i][k] * ainv[k][j] for k in range(n)), ZERO)
                 for j in range(n)] for i in range(n)]
        assert prod == [[fs(1 if i == j else 0) for j in range(n)] for i in range(n)]
    with pytest.raises(ValueError, match="singular"):
        inverse([[fs(1), fs(2)], [fs(2), fs(4)]])


def test_sparse_rank_agrees_with_dense():
    rng = random.Random(404)
    for trial in range(20):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        a = rand_mat(rng, rows, cols, with_root=(trial % 2 == 0))
        sparse = [{(j,): v for j, v in enumerate(row) if v} for row in a]
        assert sparse_rank(sparse) == dense_rank(a)


def test_truncated_ideal_dim_principal_ideal():
    reg = ("a", "b", "c")
    a = MultiPoly.variable(reg, 0)
    b = MultiPoly.variable(reg, 1)
    f = a * b
    # one homogeneous generator of degree k: slice dim is the count of
    # multiplier monomials, no collisions possible
    for d in range(2, 7):
        assert truncated_ideal_dim([f], d) == count_monomials(3, d - 2)
    assert truncated_ideal_dim([f], 0) == 0
    assert truncated_ideal_dim([f], 1) == 0


def test_truncated_ideal_dim_handles_overlaps():
    reg = ("a", "b")
    a = MultiPoly.variable(reg, 0)
    b = MultiPoly.variable(reg, 1)
    gens = [a * a, a * b]
    # degree 3 slice is a^3, a^2 b, a b^2: the product a^2*b meets ab*a
    assert truncated_ideal_dim(gens, 2) == 2
    assert truncated_ideal_dim(gens, 3) == 3
    assert truncated_ideal_dim(gens, 4) == 4


def test_truncated_ideal_dim_multiplier_filter():
    reg = ("a", "b")
    a = MultiPoly.variable(reg, 0)
    b = MultiPoly.variable(reg, 1)
    even = lambda exp: all(e % 2 == 0 for e in exp)
    # multipliers of degree 2 passing the filter: a^2 and b^2 only
    assert truncated_ideal_dim([a * b], 4, multiplier_filter=even) == 2
    assert truncated_ideal_dim([a * b], 3, multiplier_filter=even) == 0


def test_truncated_ideal_dim_rejects_bad_input():
    reg = ("a", "b")
    a = MultiPoly.variable(reg, 0)
    b = MultiPoly.variable(reg, 1)
    with pytest.raises(ValueError, match="homogeneous"):
        truncated_ideal_dim([a + a * b], 3)
    with pytest.raises(ValueError, match="zero"):
        truncated_ideal_dim([MultiPoly.zero(reg)], 3)
    with pytest.raises(ValueError, match="degree"):
        truncated_ideal_dim([a * b], -1)
    assert truncated_ideal_dim([], 5) == 0
