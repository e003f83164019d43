from fractions import Fraction as F

import pytest

from franklin import invgram
from franklin.invgram import (
    denominator,
    denominator_nu1,
    g_branches,
    g_equally_spaced,
    g_nu1,
    inverse_row,
    inverse_rows,
    satisfies_defining_equations,
    sign_structure_holds,
)
from franklin.oracle import dense_inverse, gram_dense
from franklin.recurrences import A, B
from franklin.splines import KnotConfig, special_knots


def _dense(cfg):
    return dense_inverse(gram_dense(special_knots(cfg)))


def test_denominator_examples():
    # 2*26 + (3/2)*1*4 - 2*(-1)^3
    assert denominator(3, 1) == 60
    assert denominator(2, 0) == 12
    assert denominator(5, 1) == 816
    assert denominator(3, 0) == 2 * (1 + A(3))


@pytest.mark.parametrize("N,nu", [(3, 2), (4, 2), (5, -1), (2, 1)])
def test_denominator_domain(N, nu):
    with pytest.raises(ValueError):
        denominator(N, nu)


def test_equally_spaced_row_three():
    row = inverse_row(KnotConfig(3, 0), 0)
    assert row.entries() == [5, -1, -1]
    assert row.entries() == list(_dense(KnotConfig(3, 0))[0])


def test_equally_spaced_row_two():
    row = inverse_row(KnotConfig(2, 0), 0)
    assert row.entries() == [4, -2]


def test_equally_spaced_numerators():
    for N in range(2, 12):
        for k in range(N):
            assert g_equally_spaced(N, k) == B(N - k) + (-1) ** N * B(k)


@pytest.mark.parametrize("n,nu", [(2, 1), (3, 1), (4, 1), (5, 2), (8, 3), (9, 1)])
def test_rows_match_dense_inverse(n, nu):
    cfg = KnotConfig(n, nu)
    inv = _dense(cfg)
    for row in inverse_rows(cfg):
        assert row.entries() == list(inv[row.j])


@pytest.mark.parametrize("n", [3, 5, 8])
def test_all_equal_half_spacing(n):
    cfg = KnotConfig(n, n)
    inv = _dense(cfg)
    assert [r.entries() for r in inverse_rows(cfg)] == [list(inv[j]) for j in range(cfg.N)]


@pytest.mark.parametrize("n,nu", [(3, 1), (4, 1), (6, 2), (7, 3), (10, 4)])
def test_defining_equations(n, nu):
    assert satisfies_defining_equations(KnotConfig(n, nu))


def test_defining_equations_reject_equally_spaced():
    with pytest.raises(ValueError):
        satisfies_defining_equations(KnotConfig(4, 0))


def test_branch_overlaps_agree():
    for N in range(3, 16):
        for nu in range(1, (N - 1) // 2 + 1):
            for j in range(N):
                for k in range(N):
                    values = {v for _, v in g_branches(N, nu, j, k)}
                    assert len(values) == 1, (N, nu, j, k)


def test_every_branch_is_exercised():
    seen = set()
    for N in range(3, 12):
        for nu in range(1, (N - 1) // 2 + 1):
            for j in range(N):
                for k in range(N):
                    seen.update(name for name, _ in g_branches(N, nu, j, k))
    assert seen == {"lower", "middle", "tail", "head", "before", "after"}


def test_sign_structure_small():
    for N in range(3, 25):
        for nu in range(1, (N - 1) // 2 + 1):
            for row in inverse_rows(KnotConfig.from_N(N, nu)):
                assert sign_structure_holds(row), (N, nu, row.j)


def test_sign_structure_uses_plain_distance():
    # N=3, nu=1, j=0: k=2 has circular distance 1 yet a negative entry
    row = inverse_row(KnotConfig.from_N(3, 1), 0)
    assert row.g[2] < 0
    assert sign_structure_holds(row)


def test_sign_of_matches_entry_sign():
    for cfg in (KnotConfig(4, 1), KnotConfig(5, 2), KnotConfig(3, 0)):
        for row in inverse_rows(cfg):
            for k, value in enumerate(row.entries()):
                assert row.sign_of(k) == (value > 0) - (value < 0)


def test_row_index_range():
    with pytest.raises(IndexError):
        inverse_row(KnotConfig(3, 1), 4)


def test_nu1_specialisation():
    for N in range(3, 40):
        assert denominator(N, 1) == denominator_nu1(N)
        for k in range(N):
            assert invgram.g_general(N, 1, 1, k) == g_nu1(N, k)
        assert invgram.check_nu1_identities(N)


def test_nu1_needs_three():
    with pytest.raises(ValueError):
        invgram.check_nu1_identities(2)


def test_row_scale_consistency():
    row = inverse_row(KnotConfig(4, 1), 1)
    assert row.entry(1) == row.scale * F(row.g[1]) / row.denom
