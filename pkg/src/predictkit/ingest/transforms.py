"""
Return and payout-ratio transformations
"""
from typing import Union

import numpy as np
import pandas as pd

from predictkit.exceptions import DomainError
from predictkit.models.series import SeriesSummary

ArrayLike = Union[float, np.ndarray, pd.Series]


def _result(value: np.ndarray, *inputs: ArrayLike) -> ArrayLike:
    """Return a float for scalar inputs, a Series when the first input is one"""
    if isinstance(inputs[0], pd.Series):
        return pd.Series(value, index=inputs[0].index)
    if np.ndim(value) == 0:
        return float(value)
    return value


def log_excess_return(asset_return: ArrayLike, bill_return: ArrayLike) -> ArrayLike:
    """ln(1 + R_asset) - ln(1 + R_bill)"""
    asset = np.asarray(asset_return, dtype=float)
    bill = np.asarray(bill_return, dtype=float)
    if np.any(asset <= -1.0) or np.any(bill <= -1.0):
        raise DomainError("Simple returns must exceed -1 to take logs")
    return _result(np.log1p(asset) - np.log1p(bill), asset_return)


def coupon_price_from_yield(coupon_yield: ArrayLike, bond_return: ArrayLike) -> ArrayLike:
    """
    Log coupon-price ratio ln(c_t/p_t) from the coupon yield c_t/p_{t-1}.

    The one-period return R_t = (c_t + p_t - p_{t-1})/p_{t-1} gives
    p_t/p_{t-1} = 1 + R_t - y_t.
    """
    y = np.asarray(coupon_yield, dtype=float)
    price_ratio = 1.0 + np.asarray(bond_return, dtype=float) - y
    if np.any(y <= 0.0):
        raise DomainError("Coupon yield must be positive")
    if np.any(price_ratio <= 0.0):
        raise DomainError("Implied bond price ratio 1 + R - y must be positive")
    return _result(np.log(y) - np.log(price_ratio), coupon_yield)


def payout_growth(dp_prev: ArrayLike, dp_curr: ArrayLike, total_return: ArrayLike) -> ArrayLike:
    """
    Log payout growth from level payout-price ratios and the total return.

    Price growth is (1 + R_t)/(1 + D_t/P_t), so
    dd_t = ln(DP_t/DP_{t-1}) + ln(1 + R_t) - ln(1 + DP_t).
    """
    prev = np.asarray(dp_prev, dtype=float)
    curr = np.asarray(dp_curr, dtype=float)
    ret = np.asarray(total_return, dtype=float)
    if np.any(prev <= 0.0) or np.any(curr <= 0.0):
        raise DomainError("Payout-price ratios must be positive")
    if np.any(ret <= -1.0):
        raise DomainError("Total return must exceed -1")
    value = np.log(curr) - np.log(prev) + np.log1p(ret) - np.log1p(curr)
    return _result(value, dp_curr)


def summarize_series(series: ArrayLike) -> SeriesSummary:
    """Mean, SD (n-1), min, quartiles (linear interpolation) and max"""
    values = pd.Series(np.asarray(series, dtype=float)).dropna()
    if values.empty:
        raise DomainError("Cannot summarize an empty series")
    stats = values.describe()
    return SeriesSummary(
        n_obs=int(stats["count"]),
        mean=float(stats["mean"]),
        sd=float(stats["std"]) if len(values) > 1 else 0.0,
        min=float(stats["min"]),
        q1=float(stats["25%"]),
        median=float(stats["50%"]),
        q3=float(stats["75%"]),
        max=float(stats["max"]),
    )


def winsorize(series: pd.Series, lower: float = 0.01, upper: float = 0.99) -> pd.Series:
    """Clip a series to its empirical quantiles"""
    if series.empty:
        return series
    lo, hi = series.quantile([lower, upper])
    return series.clip(lower=lo, upper=hi)
