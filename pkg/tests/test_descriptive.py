"""Sample summaries, including the survey's printed descriptive rows."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from perceprice import EtaVariant
from perceprice.corpus import column, eta_columns
from perceprice.errors import InsufficientData
from perceprice.statkit import describe


def test_symmetric_three_point_sample():
    s = describe([1.0, 2.0, 3.0])
    assert (s.mean, s.median, s.minimum, s.maximum) == (2.0, 2.0, 1.0, 3.0)
    assert s.standard_deviation == pytest.approx(1.0)
    assert s.standard_error == pytest.approx(1.0 / math.sqrt(3.0))
    assert s.n == 3


def test_even_sample_median_averages_middle_pair():
    assert describe([4.0, 1.0, 3.0, 2.0]).median == 2.5


def test_income_elasticity_column_summary(corpus):
    _, eta_i = eta_columns(corpus, EtaVariant.SIGN_RECONCILED)
    s = describe(eta_i)
    assert round(s.mean, 2) == 0.58
    assert round(s.median, 2) == 0.45
    assert round(s.standard_deviation, 2) == 0.79
    assert round(s.standard_error, 2) == 0.14
    assert s.n == 30


def test_price_elasticity_column_summary(corpus):
    s = describe(column(corpus, "eta_p"))
    assert round(s.mean, 2) == 0.02
    assert round(s.median, 2) == -0.33


def test_published_ratio_column_summary(corpus):
    s = describe(column(corpus, "ratio_as_published"))
    assert round(s.mean, 2) == -0.89
    assert s.minimum == -8.56
    assert s.maximum == 7.36


def test_insufficient_data():
    with pytest.raises(InsufficientData):
        describe([1.0])
    with pytest.raises(InsufficientData):
        describe([])


def test_non_finite_rejected():
    with pytest.raises(ValueError):
        describe([1.0, math.nan, 2.0])
    with pytest.raises(ValueError):
        describe([1.0, math.inf])


samples = st.lists(
    st.floats(min_value=-1e9, max_value=1e9, allow_nan=False, allow_infinity=False),
    min_size=2,
    max_size=40,
)


@given(samples)
def test_summary_invariants(values):
    s = describe(values)
    assert s.minimum <= s.median <= s.maximum
    assert s.minimum <= s.mean <= s.maximum
    assert s.standard_deviation >= 0.0
    assert s.standard_error == pytest.approx(
        s.standard_deviation / math.sqrt(s.n), rel=1e-12
    )
    assert s.n == len(values)


@given(samples, st.randoms(use_true_random=False))
def test_permutation_invariance(values, rng):
    shuffled = list(values)
    rng.shuffle(shuffled)
    assert describe(shuffled) == describe(values)
