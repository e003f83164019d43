import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from franklin.oracle import random_knot_sequence
from franklin.splines import (
    KnotConfig,
    KnotSequence,
    bspline_eval,
    gram_matrix,
    special_knots,
)


def test_figure_configuration():
    ks = special_knots(KnotConfig(4, 1))
    assert ks.knots == (0, F(1, 8), F(2, 8), F(1, 2), F(3, 4))
    assert ks.gaps == (F(1, 8), F(1, 8), F(1, 4), F(1, 4), F(1, 4))


def test_equally_spaced_boundaries():
    assert special_knots(KnotConfig(3, 0)).knots == (0, F(1, 3), F(2, 3))
    assert special_knots(KnotConfig(3, 3)).knots == tuple(F(j, 6) for j in range(6))


def test_small_general_config():
    ks = special_knots(KnotConfig(2, 1))
    assert ks.knots == (0, F(1, 4), F(1, 2))
    assert ks.gaps == (F(1, 4), F(1, 4), F(1, 2))


@pytest.mark.parametrize("n,nu", [(5, 1), (7, 3), (10, 9), (12, 4)])
def test_gap_pattern(n, nu):
    ks = special_knots(KnotConfig(n, nu))
    assert sum(ks.gaps) == 1
    assert ks.gaps == tuple([F(1, 2 * n)] * (2 * nu) + [F(1, n)] * (n - nu))


@pytest.mark.parametrize("n,nu", [(2, 3), (0, 0), (1, 0), (3, -1)])
def test_invalid_config(n, nu):
    with pytest.raises(ValueError):
        KnotConfig(n, nu)


def test_invalid_knots():
    with pytest.raises(ValueError):
        KnotSequence.from_knots([0, F(1, 2), F(1, 2)])
    with pytest.raises(ValueError):
        KnotSequence.from_knots([F(1, 4), F(1, 2)])
    with pytest.raises(ValueError):
        KnotSequence.from_gaps([F(1, 2), F(1, 3)])


def test_bspline_values():
    ks = special_knots(KnotConfig(4, 1))
    assert bspline_eval(ks, 0, 0) == 1
    assert bspline_eval(ks, 0, F(1, 16)) == F(1, 2)
    assert bspline_eval(ks, 0, F(7, 8)) == F(1, 2)
    assert bspline_eval(ks, 0, F(1, 2)) == 0
    # torus identification
    assert bspline_eval(ks, 0, F(-1, 8)) == F(1, 2)
    assert bspline_eval(ks, 0, F(17, 16)) == F(1, 2)


def test_cardinal_interpolation():
    for ks in (special_knots(KnotConfig(4, 1)), special_knots(KnotConfig(2, 0)),
               KnotSequence.from_knots([0, F(1, 7), F(1, 2), F(5, 6)])):
        for j in range(ks.N):
            for k, t in enumerate(ks.knots):
                assert bspline_eval(ks, j, t) == (1 if j == k else 0)


def _knot_sequences():
    @st.composite
    def build(draw):
        N = draw(st.integers(2, 10))
        seed = draw(st.integers(0, 2**32 - 1))
        return random_knot_sequence(random.Random(seed), N)
    return build()


@settings(max_examples=100, deadline=None)
@given(_knot_sequences(), st.fractions(min_value=-2, max_value=2, max_denominator=500))
def test_partition_of_unity(ks, t):
    values = [bspline_eval(ks, j, t) for j in range(ks.N)]
    assert sum(values) == 1
    assert all(0 <= v <= 1 for v in values)


def _piecewise_gram(ks):
    """Integrate N_j N_k interval by interval from endpoint values only."""
    N = ks.N
    ends = list(ks.knots) + [F(1)]
    out = [[F(0)] * N for _ in range(N)]
    for i in range(N):
        lo, hi = ends[i], ends[i + 1]
        d = hi - lo
        u = [bspline_eval(ks, j, lo) for j in range(N)]
        # right endpoint evaluated from inside the interval (t=1 wraps to t_0)
        v = [bspline_eval(ks, j, hi) for j in range(N)]
        for j in range(N):
            for k in range(N):
                out[j][k] += d / 6 * (2 * u[j] * u[k] + u[j] * v[k] + v[j] * u[k] + 2 * v[j] * v[k])
    return out


@settings(max_examples=60, deadline=None)
@given(_knot_sequences())
def test_gram_matches_piecewise_integration(ks):
    g = gram_matrix(ks)
    assert g.dense() == _piecewise_gram(ks)
    for j in range(ks.N):
        assert g.row_sum(j) == (ks.gap(j - 1) + ks.gap(j)) / 2


def _ldl_pivots(m):
    m = [row[:] for row in m]
    n = len(m)
    pivots = []
    for k in range(n):
        p = m[k][k]
        pivots.append(p)
        for i in range(k + 1, n):
            f = m[i][k] / p
            for c in range(k, n):
                m[i][c] -= f * m[k][c]
    return pivots


@settings(max_examples=60, deadline=None)
@given(_knot_sequences())
def test_gram_positive_definite(ks):
    assert all(p > 0 for p in _ldl_pivots(gram_matrix(ks).dense()))


def test_equally_spaced_gram_pattern():
    for n in (3, 4, 7):
        g = gram_matrix(special_knots(KnotConfig(n, 0)))
        assert set(g.diag) == {F(4, 6 * n)}
        assert set(g.off) == {F(1, 6 * n)}


def test_two_knots_merge_off_diagonal():
    g = gram_matrix(special_knots(KnotConfig(2, 0)))
    assert g.dense() == [[F(4, 12), F(2, 12)], [F(2, 12), F(4, 12)]]


def test_non_equally_spaced_pattern():
    n, nu = 4, 1
    g = gram_matrix(special_knots(KnotConfig(n, nu)))
    m = [[x * 12 * n for x in row] for row in g.dense()]
    assert m[0] == [6, 1, 0, 0, 2]
    assert m[1] == [1, 4, 1, 0, 0]
    assert m[2] == [0, 1, 6, 2, 0]  # the row of index 2*nu
    assert m[3] == [0, 0, 2, 8, 2]
    assert m[4] == [2, 0, 0, 2, 8]


def test_wide_pattern():
    n, nu = 7, 3
    N = n + nu
    g = gram_matrix(special_knots(KnotConfig(n, nu)))
    m = [[x * 12 * n for x in row] for row in g.dense()]
    for j in range(1, 2 * nu):
        assert (m[j][j - 1], m[j][j], m[j][j + 1]) == (1, 4, 1)
    assert (m[2 * nu][2 * nu - 1], m[2 * nu][2 * nu], m[2 * nu][2 * nu + 1]) == (1, 6, 2)
    for j in range(2 * nu + 1, N):
        assert (m[j][j - 1], m[j][j], m[j][(j + 1) % N]) == (2, 8, 2)
