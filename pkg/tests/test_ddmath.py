"""Double-double arithmetic: representation invariants and accuracy."""

import math
from fractions import Fraction

import mpmath as mp
from hypothesis import given, strategies as st

from zetasech.ddmath import (
    DD,
    dd_add,
    dd_add_d,
    dd_div,
    dd_div_d,
    dd_exp,
    dd_from_fraction,
    dd_ln,
    dd_mul,
    dd_mul_d,
    dd_neg,
    dd_sub,
    to_float,
)

mp.mp.dps = 40

# keep magnitudes where double products neither overflow nor go subnormal
finite = st.floats(min_value=-1e80, max_value=1e80, allow_nan=False).filter(
    lambda x: x == 0.0 or abs(x) > 1e-80
)
nonzero = finite.filter(lambda x: x != 0.0)


def as_fraction(x: DD) -> Fraction:
    return Fraction(x[0]) + Fraction(x[1])


def rel_err(got: Fraction, want: Fraction) -> float:
    if want == 0:
        return float(abs(got))
    return float(abs(got - want) / abs(want))


@given(finite, finite)
def test_add_is_nearly_exact(a, b):
    got = as_fraction(dd_add(dd_from_fraction(Fraction(a)), dd_from_fraction(Fraction(b))))
    assert rel_err(got, Fraction(a) + Fraction(b)) < 1e-30


@given(finite, finite)
def test_sub_matches_add_of_negation(a, b):
    x = dd_from_fraction(Fraction(a))
    y = dd_from_fraction(Fraction(b))
    assert dd_sub(x, y) == dd_add(x, dd_neg(y))


@given(finite, finite)
def test_mul_is_nearly_exact(a, b):
    got = as_fraction(dd_mul(dd_from_fraction(Fraction(a)), dd_from_fraction(Fraction(b))))
    assert rel_err(got, Fraction(a) * Fraction(b)) < 1e-30


@given(finite, nonzero)
def test_div_inverts_mul(a, b):
    x = dd_from_fraction(Fraction(a))
    y = dd_from_fraction(Fraction(b))
    back = as_fraction(dd_mul(dd_div(x, y), y))
    assert rel_err(back, Fraction(a)) < 1e-29


@given(finite, finite)
def test_scalar_helpers_agree_with_full_ops(a, b):
    x = dd_from_fraction(Fraction(a))
    y = dd_from_fraction(Fraction(b))
    assert dd_add_d(x, b) == dd_add(x, y)
    assert dd_mul_d(x, b) == dd_mul(x, y)
    if b != 0.0:
        assert dd_div_d(x, b) == dd_div(x, y)


@given(nonzero)
def test_lo_component_stays_small(a):
    hi, lo = dd_from_fraction(Fraction(a) / 3)
    # normalized: lo is at most half an ulp of hi
    assert hi + lo == hi


def test_from_fraction_is_faithful():
    f = Fraction(1, 3)
    assert rel_err(as_fraction(dd_from_fraction(f)), f) < 1e-31
    assert to_float(dd_from_fraction(f)) == 1.0 / 3.0


@given(st.floats(min_value=-40.0, max_value=40.0, allow_nan=False))
def test_exp_matches_mpmath(x):
    got = as_fraction(dd_exp(dd_from_fraction(Fraction(x))))
    want = mp.exp(mp.mpf(x))
    assert abs(mp.mpf(got.numerator) / got.denominator - want) < abs(want) * mp.mpf("1e-28")


@given(st.floats(min_value=1e-6, max_value=1e6, allow_nan=False))
def test_ln_matches_mpmath(x):
    got = as_fraction(dd_ln(x))
    want = mp.log(mp.mpf(x))
    assert abs(mp.mpf(got.numerator) / got.denominator - want) < mp.mpf("1e-28") * (
        1 + abs(want)
    )


@given(st.floats(min_value=1e-6, max_value=1e6, allow_nan=False))
def test_exp_inverts_ln(x):
    back = to_float(dd_exp(dd_ln(x)))
    assert math.isclose(back, x, rel_tol=1e-15)


def test_exp_extremes():
    assert dd_exp((-800.0, 0.0)) == (0.0, 0.0)
    try:
        dd_exp((800.0, 0.0))
    except OverflowError:
        pass
    else:
        raise AssertionError("expected OverflowError for exp(800)")


def test_ln_rejects_nonpositive():
    for bad in (0.0, -2.5):
        try:
            dd_ln(bad)
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")
