"""Log-transform policies and the transformed-ratio regression."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from perceprice.errors import EmptyAfterTransform, ZeroValueUnderAbsLog
from perceprice.statkit import (
    LogTransformPolicy,
    design_with_intercept,
    fit_log_ratio_regression,
    log_transform,
    ols,
    paired_log_transform,
)

ABS = LogTransformPolicy.ABS_LOG
SIGNED = LogTransformPolicy.SIGNED_LOG1P
DROP = LogTransformPolicy.DROP_NON_POSITIVE


def test_abs_log_examples():
    assert log_transform([-1.0, math.e], ABS) == pytest.approx((0.0, 1.0))


def test_drop_non_positive_examples():
    assert log_transform([-1.0, 2.0], DROP) == pytest.approx((math.log(2.0),))
    assert log_transform([-1.0, 0.0], DROP) == ()


def test_abs_log_rejects_zero():
    with pytest.raises(ZeroValueUnderAbsLog):
        log_transform([0.0], ABS)


def test_signed_log1p_examples():
    out = log_transform([-1.0, 0.0, math.e - 1.0], SIGNED)
    assert out == pytest.approx((-math.log(2.0), 0.0, 1.0))


@given(
    st.lists(
        st.floats(min_value=-1e6, max_value=1e6, allow_nan=False).filter(lambda v: v != 0),
        min_size=1,
        max_size=30,
    )
)
def test_count_preserving_policies(values):
    assert len(log_transform(values, ABS)) == len(values)
    assert len(log_transform(values, SIGNED)) == len(values)


def test_paired_drop_removes_rows_pairwise():
    dependent = [1.0, -2.0, 3.0, 4.0, 5.0]
    regressor = [2.0, 3.0, -1.0, 5.0, 6.0]
    y, x, kept = paired_log_transform(dependent, regressor, DROP)
    assert kept == (0, 3, 4)
    assert x == pytest.approx(tuple(math.log(regressor[i]) for i in kept))
    assert y == pytest.approx(tuple(math.log(dependent[i]) for i in kept))


def test_paired_drop_keeps_raw_dependent_when_untransformed():
    dependent = [-9.0, 4.0, 7.0, -1.0]
    regressor = [1.0, 2.0, 3.0, 4.0]
    y, x, kept = paired_log_transform(dependent, regressor, DROP, transform_dependent=False)
    assert kept == (0, 1, 2, 3)  # negatives in the dependent no longer matter
    assert y == tuple(dependent)


def test_paired_drop_needs_three_rows():
    with pytest.raises(EmptyAfterTransform):
        paired_log_transform([1.0, 1.0, -1.0], [2.0, -2.0, 2.0], DROP)


def test_paired_length_mismatch():
    with pytest.raises(ValueError):
        paired_log_transform([1.0, 2.0], [1.0], ABS)


def test_policies_coincide_on_positive_data():
    y = [0.5, 1.2, 2.0, 3.7, 8.1, 0.9]
    x = [1.1, 2.2, 3.3, 4.4, 5.5, 6.6]
    fit_abs = fit_log_ratio_regression(y, x, ABS)
    fit_drop = fit_log_ratio_regression(y, x, DROP)
    assert fit_abs.coefficient_estimates == pytest.approx(
        fit_drop.coefficient_estimates, rel=1e-12
    )
    assert fit_abs.r_squared == pytest.approx(fit_drop.r_squared, rel=1e-12)


def test_fit_matches_manual_transform():
    y = [-0.5, 1.2, -2.0, 3.7, 8.1]
    x = [1.1, -2.2, 3.3, -4.4, 5.5]
    fit = fit_log_ratio_regression(y, x, ABS, term_labels=("intercept", "log|x|"))
    manual = ols(
        design_with_intercept(log_transform(x, ABS)),
        log_transform(y, ABS),
    )
    assert fit.coefficient_estimates == pytest.approx(
        manual.coefficient_estimates, rel=1e-13
    )
    assert fit.term_labels == ("intercept", "log|x|")
    assert fit.df_residual == len(y) - 2


def test_fit_can_leave_dependent_raw():
    y = [-0.5, 1.2, -2.0, 3.7, 8.1]
    x = [1.1, 2.2, 3.3, 4.4, 5.5]
    fit = fit_log_ratio_regression(y, x, ABS, transform_dependent=False)
    manual = ols(design_with_intercept(log_transform(x, ABS)), y)
    assert fit.coefficient_estimates == pytest.approx(
        manual.coefficient_estimates, rel=1e-13
    )
