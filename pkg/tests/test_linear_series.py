import json

import pytest
from hypothesis import assume, given, strategies as st

from mgbar.linear_series import (
    RegimeError,
    TailConfiguration,
    decomposition_identity,
    dimension_profile,
    h0_twisted,
    rank_kn,
    twisted_degree,
    vanishing_sequence_head,
)
from mgbar.oracle import naive_h0


def test_rank_kn():
    assert rank_kn(5, 1) == 5
    assert rank_kn(5, 2) == 12
    assert rank_kn(10, 3) == 45


def test_degree_formula():
    assert twisted_degree(3, 2, 2, 2) == 2 * 2 * 2 + 2 * 2
    assert twisted_degree(0, 3, 2, 3) == -1


def test_profile_g5_r2():
    prof = dimension_profile(TailConfiguration(5, 2), 2)
    assert prof.dims == (12, 10, 10)
    assert all(prof.in_regime)


def test_profile_g5_r2_n3():
    prof = dimension_profile(TailConfiguration(5, 2), 3)
    # degree 12 + (6 - a)*2 minus 2 for h^0
    assert prof.dims == (20, 18, 18, 16, 14)
    assert json.loads(prof.to_json())["dims"] == list(prof.dims)


def test_regime_error_on_small_degree():
    with pytest.raises(RegimeError):
        h0_twisted(0, 3, 2, 3)
    with pytest.raises(RegimeError):
        h0_twisted(0, 3, 3, 5)
    assert h0_twisted(0, 4, 2, 3) == 1


def test_argument_ranges():
    for args in [(2, 1, 1, 2), (2, 1, 2, 1), (2, 1, 2, 4), (-1, 1, 2, 2)]:
        with pytest.raises(ValueError):
            h0_twisted(*args)
    with pytest.raises(ValueError):
        TailConfiguration(5, 6)
    with pytest.raises(ValueError):
        TailConfiguration(2, 0)


def test_rational_core_profile():
    prof = dimension_profile(TailConfiguration(3, 3), 3)
    assert prof.dims == (10, 7, 7, 4, 1)


def test_out_of_regime_entries_are_none():
    prof = dimension_profile(TailConfiguration(3, 3), 4)
    # a = 6 gives degree -8 + 2*3 = -2
    assert prof.dims[-1] is None and prof.in_regime[-1] is False
    assert prof.dims[:-1] == (14, 11, 11, 8, 5, 2)


@given(st.integers(3, 40), st.data())
def test_decomposition_identity(g, data):
    r = data.draw(st.integers(0, g))
    n = data.draw(st.integers(1, 8))
    assert decomposition_identity(g, r, n)


@given(st.integers(3, 40), st.data())
def test_profile_matches_oracle(g, data):
    r = data.draw(st.integers(0, g))
    n = data.draw(st.integers(2, 8))
    prof = dimension_profile(TailConfiguration(g, r), n)
    assert prof.dims[0] == rank_kn(g, n)
    assert prof.dims[1] == prof.dims[2] == naive_h0(g - r, r, n, 2)
    for a in range(2, 2 * n - 1):
        assert prof.dims[a] == naive_h0(g - r, r, n, a)


@given(st.integers(3, 40), st.data())
def test_dimension_drops_by_r(g, data):
    r = data.draw(st.integers(1, g))
    n = data.draw(st.integers(2, 8))
    prof = dimension_profile(TailConfiguration(g, r), n)
    assert prof.dims[0] - prof.dims[1] == r
    for a in range(2, 2 * n - 2):
        if prof.dims[a + 1] is not None:
            assert prof.dims[a] - prof.dims[a + 1] == r


def test_vanishing_head():
    assert vanishing_sequence_head(TailConfiguration(5, 2), 2) == (0, 2)
    assert vanishing_sequence_head(TailConfiguration(5, 2), 3) == (0, 2, 3)
    assert vanishing_sequence_head(TailConfiguration(8, 3), 5) == (0, 2, 3)
    assert vanishing_sequence_head(TailConfiguration(5, 0), 3) == ()


@given(st.integers(3, 30), st.data())
def test_vanishing_head_skips_one(g, data):
    r = data.draw(st.integers(1, g))
    n = data.draw(st.integers(2, 6))
    assume(g - r > 0 or r >= 2 * n)
    head = vanishing_sequence_head(TailConfiguration(g, r), n)
    assert head[:2] == (0, 2)
    assert 1 not in head
