import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from t2spline import (
    HeightOutOfRange,
    NT2FuzzyPoint,
    NT2FuzzyScalar,
    NegativeSpread,
    OrderingViolation,
    SpreadOrderViolation,
    T2SplineError,
)

REFERENCE = NT2FuzzyScalar(4, 4.3, 4.6, 5, 5.4, 5.7, 6, h=0.6)


# --- construction -----------------------------------------------------------

def test_valid_scalar_centered_at_5():
    s = REFERENCE
    assert s.c == 5.0
    assert s.components() == (4.0, 4.3, 4.6, 5.0, 5.4, 5.7, 6.0)
    assert s.h == 0.6


def test_degenerate_all_equal_scalar():
    s = NT2FuzzyScalar(5, 5, 5, 5, 5, 5, 5, h=0.5)
    assert s.is_degenerate
    assert s.spreads == (0.0,) * 6


def test_ordering_violation_names_the_pair():
    with pytest.raises(OrderingViolation) as exc:
        NT2FuzzyScalar(4, 4.6, 4.3, 5, 5.4, 5.7, 6, h=0.6)
    assert exc.value.pair == ("l", "rl")
    assert "l > rl" in str(exc.value)


@pytest.mark.parametrize(
    "values,pair",
    [
        ((4.5, 4.3, 4.6, 5, 5.4, 5.7, 6), ("ll", "l")),
        ((4, 4.3, 5.2, 5, 5.4, 5.7, 6), ("rl", "c")),
        ((4, 4.3, 4.6, 5, 4.9, 5.7, 6), ("c", "lr")),
        ((4, 4.3, 4.6, 5, 5.8, 5.7, 6), ("lr", "r")),
        ((4, 4.3, 4.6, 5, 5.4, 6.1, 6), ("r", "rr")),
    ],
)
def test_every_adjacent_pair_is_checked(values, pair):
    with pytest.raises(OrderingViolation) as exc:
        NT2FuzzyScalar(*values, h=0.6)
    assert exc.value.pair == pair


@pytest.mark.parametrize("h", [0.0, -0.2, 1.0001, math.nan])
def test_height_out_of_range(h):
    with pytest.raises(HeightOutOfRange):
        NT2FuzzyScalar(4, 4.3, 4.6, 5, 5.4, 5.7, 6, h=h)


def test_height_of_exactly_one_is_allowed():
    NT2FuzzyScalar(4, 4.3, 4.6, 5, 5.4, 5.7, 6, h=1.0)


def test_non_finite_component_rejected():
    with pytest.raises(T2SplineError):
        NT2FuzzyScalar(4, 4.3, math.inf, 5, 5.4, 5.7, 6, h=0.6)


# --- from_spreads ------------------------------------------------------------

def test_from_spreads_zero_spreads_is_degenerate():
    s = NT2FuzzyScalar.from_spreads(5.0, (0, 0, 0, 0, 0, 0), h=0.5)
    assert s.components() == (5.0,) * 7


def test_from_spreads_reproduces_reference_scalar():
    s = NT2FuzzyScalar.from_spreads(5.0, (1, 0.7, 0.4, 0.4, 0.7, 1), h=0.6)
    assert s == REFERENCE


def test_from_spreads_around_zero():
    s = NT2FuzzyScalar.from_spreads(0.0, (1, 0.5, 0.2, 0.2, 0.5, 1), h=0.8)
    assert s.components() == (-1.0, -0.5, -0.2, 0.0, 0.2, 0.5, 1.0)


def test_from_spreads_rejects_negative():
    with pytest.raises(NegativeSpread):
        NT2FuzzyScalar.from_spreads(5.0, (1, 0.7, -0.1, 0.4, 0.7, 1), h=0.6)


def test_from_spreads_rejects_bad_side_order():
    with pytest.raises(SpreadOrderViolation):
        NT2FuzzyScalar.from_spreads(5.0, (0.4, 0.7, 1, 0.4, 0.7, 1), h=0.6)
    with pytest.raises(SpreadOrderViolation):
        NT2FuzzyScalar.from_spreads(5.0, (1, 0.7, 0.4, 0.7, 0.4, 1), h=0.6)


# --- membership functions ----------------------------------------------------

def test_membership_upper_apex_edge_midpoint():
    s = REFERENCE
    assert s.membership_upper(5.0) == 1.0
    assert s.membership_upper(4.0) == 0.0
    assert s.membership_upper(6.0) == 0.0
    assert s.membership_upper(4.5) == pytest.approx(0.5, abs=1e-12)
    assert s.membership_upper(3.0) == 0.0
    assert s.membership_upper(7.0) == 0.0


def test_membership_lower_apex_edge_midpoint():
    s = REFERENCE
    assert s.membership_lower(5.0) == 0.6
    assert s.membership_lower(4.6) == 0.0
    assert s.membership_lower(5.4) == 0.0
    assert s.membership_lower(4.8) == pytest.approx(0.3, abs=1e-12)
    assert s.membership_lower(4.0) == 0.0


def test_degenerate_membership_is_indicator_at_c():
    s = NT2FuzzyScalar(5, 5, 5, 5, 5, 5, 5, h=0.4)
    assert s.membership_upper(5.0) == 1.0
    assert s.membership_lower(5.0) == 0.4
    for x in (4.999999, 5.000001, 0.0):
        assert s.membership_upper(x) == 0.0
        assert s.membership_lower(x) == 0.0


def test_zero_width_left_side_only():
    s = NT2FuzzyScalar(5, 5, 5, 5, 5.4, 5.7, 6, h=0.5)
    assert s.membership_upper(5.0) == 1.0
    assert s.membership_upper(4.9) == 0.0
    assert s.membership_upper(5.5) == 0.5


# --- property tests ----------------------------------------------------------

_side = st.tuples(
    st.floats(0, 50), st.floats(0, 50), st.floats(0, 50)
)


@st.composite
def scalars(draw):
    c = draw(st.floats(-100, 100, allow_nan=False, allow_infinity=False))
    left = sorted(draw(_side))
    right = sorted(draw(_side))
    h = draw(st.floats(0.01, 1.0))
    spreads = (left[2], left[1], left[0], right[0], right[1], right[2])
    return NT2FuzzyScalar.from_spreads(c, spreads, h)


@given(s=scalars(), x=st.floats(-250, 250))
def test_footprint_containment(s, x):
    lo = s.membership_lower(x)
    hi = s.membership_upper(x)
    assert 0.0 <= lo <= 1.0
    assert 0.0 <= hi <= 1.0
    assert lo <= hi + 1e-12


@given(s=scalars(), a1=st.floats(0, 0.999), a2=st.floats(0, 0.999))
def test_umf_alpha_intervals_nest(s, a1, a2):
    a1, a2 = min(a1, a2), max(a1, a2)
    lo1 = s.ll + a1 * (s.c - s.ll)
    hi1 = s.rr + a1 * (s.c - s.rr)
    lo2 = s.ll + a2 * (s.c - s.ll)
    hi2 = s.rr + a2 * (s.c - s.rr)
    assert lo1 <= lo2 <= s.c
    assert s.c <= hi2 <= hi1


@given(s=scalars())
def test_spreads_round_trip(s):
    rebuilt = NT2FuzzyScalar.from_spreads(s.c, s.spreads, s.h)
    for a, b in zip(rebuilt.components(), s.components()):
        assert a == pytest.approx(b, abs=1e-9)
    assert rebuilt.h == s.h


@given(s=scalars())
def test_membership_at_crisp_value(s):
    assert s.membership_upper(s.c) == 1.0
    assert s.membership_lower(s.c) == s.h


# --- fuzzy points -------------------------------------------------------------

def test_point_holds_two_scalars():
    p = NT2FuzzyPoint(REFERENCE, NT2FuzzyScalar(2, 2, 2, 3, 3.5, 3.5, 4, h=0.9))
    assert p.crisp_xy == (5.0, 3.0)


def test_point_rejects_non_scalar_coordinates():
    with pytest.raises(T2SplineError):
        NT2FuzzyPoint(1.0, REFERENCE)


def test_crisp_point_constructor():
    p = NT2FuzzyPoint.crisp(5.0, 3.0)
    assert p.x.is_degenerate and p.y.is_degenerate
    assert p.crisp_xy == (5.0, 3.0)
