"""Nilpotent orbit census for sp(2n) and the shift-chain square lemma."""

import itertools

from spnil.field import FieldScalar
from spnil.orbits import (
    CensusRow,
    census,
    component_types,
    lowest_coefficient_membership,
    nilpotent_rep,
    partitions_spn,
    sl2_complete,
    sl2_lowest_coefficient_check,
    verify_sl2_square_lemma,
)
from spnil.splie import bracket, centralizer_dim, is_nilpotent, is_sp, sp_dim


def rank_of(mat):
    from spnil.linalg import dense_rank
    return dense_rank([list(row) for row in mat.entries])


def jordan_type(m):
    """Partition of m.size read off the rank sequence of powers of m."""
    ranks = [m.size]
    power = m
    while True:
        r = rank_of(power)
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


def test_partition_lists_are_frozen():
    assert partitions_spn(1) == [(2,), (1, 1)]
    assert partitions_spn(2) == [(4,), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert partitions_spn(3) == [
        (6,), (4, 2), (4, 1, 1), (3, 3), (2, 2, 2), (2, 2, 1, 1),
        (2, 1, 1, 1, 1), (1, 1, 1, 1, 1, 1)]
    # odd parts always occur with even multiplicity
    for n in (1, 2, 3, 4):
        for lam in partitions_spn(n):
            assert sum(lam) == 2 * n
            for part in set(lam):
                if part % 2 == 1:
                    assert lam.count(part) % 2 == 0


def test_component_types_are_even_partitions():
    assert component_types(1) == [(2,)]
    assert component_types(2) == [(4,), (2, 2)]
    assert component_types(3) == [(6,), (4, 2), (2, 2, 2)]
    assert component_types(4) == [(8,), (6, 2), (4, 4), (4, 2, 2), (2, 2, 2, 2)]
    for n in (1, 2, 3, 4):
        for lam in component_types(n):
            assert all(part % 2 == 0 for part in lam)
            assert lam in partitions_spn(n)


def test_nilpotent_rep_type_and_membership():
    for n in (1, 2, 3):
        for lam in partitions_spn(n):
            y = nilpotent_rep(lam)
            assert y.size == 2 * n
            assert is_sp(y)
            assert is_nilpotent(y)
            assert jordan_type(y) == lam


def test_sl2_complete_relations():
    for n in (1, 2, 3):
        for lam in partitions_spn(n):
            if lam == (1,) * 2 * n:
                continue
            y = nilpotent_rep(lam)
            t = sl2_complete(y)
            assert (t.e - y).is_zero()
            assert is_sp(t.f) and is_sp(t.h)
            assert (bracket(t.h, t.e) - t.e.scale(2)).is_zero()
            assert (bracket(t.h, t.f) + t.f.scale(2)).is_zero()
            assert (bracket(t.e, t.f) - t.h).is_zero()
            size = 2 * n
            assert all(t.h.entries[i][j].is_zero()
                       for i in range(size) for j in range(size) if i != j)


def test_census_rank_one():
    assert census(1) == [
        CensusRow((2,), 2, 1, 4, True),
        CensusRow((1, 1), 0, 0, 3, False),
    ]


def test_census_rank_two():
    assert census(2) == [
        CensusRow((4,), 8, 2, 12, True),
        CensusRow((2, 2), 6, 2, 12, True),
        CensusRow((2, 1, 1), 4, 1, 11, False),
        CensusRow((1, 1, 1, 1), 0, 0, 10, False),
    ]


def test_census_rank_three():
    rows = {row.partition: row for row in census(3)}
    assert set(rows) == set(partitions_spn(3))
    want = {
        (6,): (18, 3, 24, True),
        (4, 2): (16, 3, 24, True),
        (4, 1, 1): (14, 2, 23, False),
        (3, 3): (14, 2, 23, False),
        (2, 2, 2): (12, 3, 24, True),
        (2, 2, 1, 1): (10, 2, 23, False),
        (2, 1, 1, 1, 1): (6, 1, 22, False),
        (1, 1, 1, 1, 1, 1): (0, 0, 21, False),
    }
    for lam, (od, vp, xd, comp) in want.items():
        row = rows[lam]
        assert (row.orbit_dim, row.vplus_dim, row.xlambda_dim,
                row.is_component) == (od, vp, xd, comp)


def test_census_internal_consistency():
    for n in (1, 2, 3):
        target = 2 * n * n + 2 * n
        rows = census(n)
        assert [row.partition for row in rows] == partitions_spn(n)
        for row in rows:
            y = nilpotent_rep(row.partition)
            assert row.orbit_dim == sp_dim(n) - centralizer_dim(y)
            assert row.xlambda_dim == sp_dim(n) + row.vplus_dim
            assert row.is_component == (row.xlambda_dim == target)
            assert row.is_component == (row.partition in component_types(n))


def test_square_lemma_on_all_small_types():
    for n in (1, 2, 3):
        for lam in partitions_spn(n):
            if lam == (1,) * 2 * n:
                continue
            y = nilpotent_rep(lam)
            assert verify_sl2_square_lemma(y, trials=8, seed=11)


def test_lowest_coefficient_single_chain():
    for dim in range(1, 7):
        for k in range(0, dim):
            member = lowest_coefficient_membership((dim,), k)
            assert member == (2 * k > dim - 1)
            assert sl2_lowest_coefficient_check((dim,), k)


def test_lowest_coefficient_multi_chain():
    # with several chains the criterion reads off the largest dimension
    for dims in [(3, 1), (4, 2), (5, 3, 1), (2, 2)]:
        for k in range(0, dims[0]):
            assert sl2_lowest_coefficient_check(dims, k)
