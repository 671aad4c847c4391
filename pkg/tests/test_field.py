import math
import warnings
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fitzri.field import (
    ConditioningWarning,
    FieldMode,
    ZeroTest,
    check_nonzero,
    coerce,
    format_scalar,
    parse_scalar,
    scalar_is_zero,
    sgn,
)


def test_parse_rational_literals():
    assert parse_scalar("3/4", FieldMode.EXACT) == Fraction(3, 4)
    assert parse_scalar("-0.25", FieldMode.EXACT) == Fraction(-1, 4)
    assert parse_scalar("3/4", FieldMode.FLOAT) == 0.75
    assert parse_scalar("1e-3", FieldMode.FLOAT) == 0.001


@pytest.mark.parametrize("text", ["abc", "1/0", "", "nan"])
def test_parse_rejects_garbage_in_exact_mode(text):
    with pytest.raises(ValueError):
        parse_scalar(text, FieldMode.EXACT)


@pytest.mark.parametrize("text", ["inf", "nan", "-inf", "x"])
def test_parse_rejects_nonfinite_floats(text):
    with pytest.raises(ValueError):
        parse_scalar(text, FieldMode.FLOAT)


def test_coerce_rejects_nonfinite():
    with pytest.raises(ValueError):
        coerce(math.inf, FieldMode.EXACT)
    with pytest.raises(ValueError):
        coerce(math.nan, FieldMode.FLOAT)


def test_format():
    assert format_scalar(Fraction(6, 3)) == "2"
    assert format_scalar(Fraction(-1, 3)) == "-1/3"
    assert format_scalar(0.1) == "0.1"


@given(st.fractions(max_denominator=10**6))
def test_exact_roundtrip(q):
    assert parse_scalar(format_scalar(q), FieldMode.EXACT) == q


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_float_roundtrip(x):
    assert parse_scalar(format_scalar(x), FieldMode.FLOAT) == x


def test_zero_test_threshold():
    zt = ZeroTest(1e-10, 1e-9)
    assert zt.threshold(0) == 1e-10
    assert scalar_is_zero(5e-11, 0, zt)
    assert not scalar_is_zero(2e-10, 0, zt)
    # relative part scales with the magnitude of the data
    assert scalar_is_zero(1e-6, 1e4, zt)


def test_exact_zero_test_ignores_tolerance():
    assert not scalar_is_zero(Fraction(1, 10**30), 1e9)
    assert scalar_is_zero(Fraction(0))


def test_negative_scale_rejected():
    with pytest.raises(ValueError):
        scalar_is_zero(1.0, -1.0)


def test_conditioning_warning_near_threshold():
    with pytest.warns(ConditioningWarning):
        assert check_nonzero(5e-10, 0.0)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert check_nonzero(1e-3, 0.0)
        assert not check_nonzero(1e-11, 0.0)


def test_sgn_zero_is_positive():
    assert sgn(0) == 1 and sgn(-0.0) == 1 and sgn(Fraction(-1, 7)) == -1
