"""The three t-conorms and their shared algebra."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quasimod import TConorm, conorm_from_name

unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
conorms = st.sampled_from(list(TConorm))


@given(conorms, unit, unit)
def test_commutative_and_in_range(c, a, b):
    v = c.apply(a, b)
    assert v == c.apply(b, a)
    assert 0.0 <= v <= 1.0


@given(conorms, unit)
def test_zero_is_the_unit(c, a):
    assert c.apply(0.0, a) == a
    assert c.apply(a, 0.0) == a


@given(conorms, unit, unit)
def test_dominates_max(c, a, b):
    assert c.apply(a, b) >= max(a, b)


@given(conorms, unit, unit, unit)
def test_monotone_in_each_argument(c, a, b, b2):
    lo, hi = min(b, b2), max(b, b2)
    assert c.apply(a, lo) <= c.apply(a, hi)


# dyadic arguments keep prob_sum exact, so associativity is an equality
@given(conorms, st.integers(0, 64), st.integers(0, 64), st.integers(0, 64))
def test_associative_on_dyadics(c, i, j, k):
    a, b, d = i / 64, j / 64, k / 64
    assert c.apply(a, c.apply(b, d)) == c.apply(c.apply(a, b), d)


def test_apply_rejects_out_of_range():
    with pytest.raises(ValueError):
        TConorm.MAX.apply(1.5, 0.2)
    with pytest.raises(ValueError):
        TConorm.BOUNDED_SUM.apply(0.2, -0.1)


def test_combine_folds_with_unit():
    assert TConorm.MAX.combine([]) == 0.0
    assert TConorm.MAX.combine([0.2, 0.7, 0.4]) == 0.7
    assert TConorm.BOUNDED_SUM.combine([0.5, 0.75]) == 1.0
    assert TConorm.PROBABILISTIC_SUM.combine([0.5, 0.5]) == 0.75


@given(conorms, st.floats(min_value=1e-6, max_value=1.0, allow_nan=False))
def test_half_radius_splits_strictly_below(c, r):
    h = c.half_radius(r)
    assert 0.0 < h < r
    assert c.apply(h, h) < r


def test_half_radius_table():
    assert TConorm.MAX.half_radius(0.8) == 0.4
    assert TConorm.PROBABILISTIC_SUM.half_radius(0.8) == 0.4
    assert TConorm.BOUNDED_SUM.half_radius(0.8) == 0.2
    with pytest.raises(ValueError):
        TConorm.MAX.half_radius(0.0)
    with pytest.raises(ValueError):
        TConorm.MAX.half_radius(1.2)


def test_names_round_trip():
    for c in TConorm:
        assert conorm_from_name(c.wire_name) is c
        assert conorm_from_name(c.value) is c
    with pytest.raises(ValueError, match="unknown conorm"):
        conorm_from_name("lukasiewicz")
