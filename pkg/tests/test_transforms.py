import math

import numpy as np
import pandas as pd
import pytest
from hypothesis import given
from hypothesis import strategies as st

from predictkit.exceptions import DomainError
from predictkit.ingest import (
    coupon_price_from_yield,
    log_excess_return,
    payout_growth,
    summarize_series,
    winsorize,
)

returns = st.floats(min_value=-0.9, max_value=5.0, allow_nan=False)


@st.composite
def price_paths(draw):
    """Positive price and payout paths of a common length"""
    n = draw(st.integers(min_value=2, max_value=40))
    prices = draw(st.lists(st.floats(50.0, 200.0), min_size=n, max_size=n))
    payouts = draw(st.lists(st.floats(0.1, 20.0), min_size=n, max_size=n))
    return np.array(prices), np.array(payouts)


def test_log_excess_return_matches_definition():
    assert log_excess_return(0.10, 0.02) == pytest.approx(math.log(1.10) - math.log(1.02))


def test_log_excess_return_zero_when_equal():
    assert log_excess_return(0.05, 0.05) == 0.0


def test_log_excess_return_keeps_series_index():
    asset = pd.Series([0.1, 0.2], index=[2000, 2001])
    bill = pd.Series([0.01, 0.02], index=[2000, 2001])
    out = log_excess_return(asset, bill)
    assert list(out.index) == [2000, 2001]
    assert out.loc[2001] == pytest.approx(math.log(1.2) - math.log(1.02))


@pytest.mark.parametrize("asset,bill", [(-1.0, 0.01), (0.1, -1.5)])
def test_log_excess_return_rejects_total_loss(asset, bill):
    with pytest.raises(DomainError):
        log_excess_return(asset, bill)


@given(returns, returns)
def test_log_excess_return_antisymmetric(a, b):
    assert log_excess_return(a, b) == pytest.approx(-log_excess_return(b, a), abs=1e-12)


def test_coupon_price_from_yield_backs_out_price_ratio():
    # 5% yield, 7% return: p_t/p_{t-1} = 1.02
    expected = math.log(0.05) - math.log(1.02)
    assert coupon_price_from_yield(0.05, 0.07) == pytest.approx(expected)


def test_coupon_price_flat_price():
    assert coupon_price_from_yield(0.04, 0.04) == pytest.approx(math.log(0.04))


@pytest.mark.parametrize("y,r,expected", [(0.05, 0.10, -3.0445), (0.04, 0.00, -3.1781)])
def test_coupon_price_reference_points(y, r, expected):
    assert coupon_price_from_yield(y, r) == pytest.approx(expected, abs=1e-4)


@given(price_paths())
def test_coupon_price_round_trip_over_paths(path):
    prices, coupons = path
    previous, current, coupon = prices[:-1], prices[1:], coupons[1:]
    coupon_yield = coupon / previous
    bond_return = (coupon + current - previous) / previous
    backed_out = coupon_price_from_yield(coupon_yield, bond_return)
    np.testing.assert_allclose(backed_out, np.log(coupon / current), rtol=0, atol=1e-12)


@pytest.mark.parametrize("y,r", [(0.0, 0.05), (-0.01, 0.05), (0.5, -0.6)])
def test_coupon_price_domain(y, r):
    with pytest.raises(DomainError):
        coupon_price_from_yield(y, r)


def test_payout_growth_constant_ratio_is_price_growth():
    # unchanged DP: growth equals ln(1+R) - ln(1+DP)
    value = payout_growth(0.04, 0.04, 0.10)
    assert value == pytest.approx(math.log(1.10) - math.log(1.04))


def test_payout_growth_reconstructs_dividends():
    p0, p1, d1 = 100.0, 105.0, 4.2
    dp_prev, dp_curr = 4.0 / p0, d1 / p1
    total = (p1 + d1 - p0) / p0
    assert payout_growth(dp_prev, dp_curr, total) == pytest.approx(math.log(d1 / 4.0))


@given(price_paths())
def test_payout_growth_round_trip_over_paths(path):
    prices, payouts = path
    ratio = payouts / prices
    total = (prices[1:] + payouts[1:] - prices[:-1]) / prices[:-1]
    growth = payout_growth(ratio[:-1], ratio[1:], total)
    expected = np.log(payouts[1:] / payouts[:-1])
    np.testing.assert_allclose(growth, expected, rtol=0, atol=1e-12)


@pytest.mark.parametrize(
    "prev,curr,ret", [(0.0, 0.03, 0.1), (0.03, -0.01, 0.1), (0.03, 0.03, -1.0)]
)
def test_payout_growth_domain(prev, curr, ret):
    with pytest.raises(DomainError):
        payout_growth(prev, curr, ret)


def test_summarize_series_quartiles():
    stats = summarize_series([1.0, 2.0, 3.0, 4.0, 5.0])
    assert stats.n_obs == 5
    assert stats.mean == 3.0
    assert stats.sd == pytest.approx(np.std([1, 2, 3, 4, 5], ddof=1))
    quartiles = (stats.min, stats.q1, stats.median, stats.q3, stats.max)
    assert quartiles == (1.0, 2.0, 3.0, 4.0, 5.0)


def test_summarize_series_interpolates_quartiles():
    stats = summarize_series([1.0, 2.0, 3.0, 4.0])
    assert (stats.q1, stats.median, stats.q3) == pytest.approx((1.75, 2.5, 3.25))
    assert (stats.min, stats.max) == (1.0, 4.0)


def test_summarize_single_value_has_zero_sd():
    stats = summarize_series([0.7])
    assert stats.sd == 0.0
    assert stats.median == 0.7


def test_summarize_empty_raises():
    with pytest.raises(DomainError):
        summarize_series([])


def test_winsorize_clips_to_quantiles():
    values = pd.Series(np.arange(101, dtype=float))
    out = winsorize(values, 0.05, 0.95)
    assert out.min() == 5.0
    assert out.max() == 95.0
    assert out.loc[50] == 50.0
