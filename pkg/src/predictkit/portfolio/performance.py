"""
Certainty equivalents, Sharpe ratios and turnover
"""
import logging
import math
from typing import Optional, Tuple

import numpy as np
import pandas as pd

from predictkit.exceptions import DegenerateError, SampleSizeError
from predictkit.models import PortfolioTrack

logger = logging.getLogger(__name__)

MIN_Z_OBS = 5


def cer(track: PortfolioTrack) -> float:
    """100 (mean - gamma/2 var) of the simple portfolio return, in percent"""
    returns = track.returns.to_numpy(dtype=float)
    if len(returns) < 2:
        raise SampleSizeError("CER needs at least two years")
    return float(100.0 * (returns.mean() - track.gamma / 2.0 * returns.var(ddof=1)))


def sharpe(track: PortfolioTrack, bill_returns: Optional[pd.Series] = None) -> float:
    """Annual Sharpe ratio of the portfolio return over bills"""
    if bill_returns is None:
        bills = track.bill_returns
    else:
        bills = bill_returns.reindex(track.returns.index)
    excess = track.returns.to_numpy(dtype=float) - bills.to_numpy(dtype=float)
    if len(excess) < 2:
        raise SampleSizeError("Sharpe ratio needs at least two years")
    sd = excess.std(ddof=1)
    if sd == 0.0 or not np.isfinite(sd):
        raise DegenerateError("Excess portfolio return has zero variance")
    return float(excess.mean() / sd)


def _moment_cer(mean: float, second: float, gamma: float) -> float:
    return mean - gamma / 2.0 * (second - mean**2)


def cer_gain_z(
    null_track: PortfolioTrack, alt_track: PortfolioTrack
) -> Tuple[float, float]:
    """
    Delta-method z-statistic of the CER difference.

    The moments (E R_null, E R_alt, E R_null^2, E R_alt^2) are estimated with
    their sample covariance and mapped through CER = mu - gamma/2 (m2 - mu^2).
    Returns the plug-in gain (decimal) and its z.
    """
    if not null_track.returns.index.equals(alt_track.returns.index):
        raise ValueError("Tracks must cover the same years")
    if null_track.gamma != alt_track.gamma:
        raise ValueError("Tracks must share the risk aversion")
    n = len(null_track)
    if n < MIN_Z_OBS:
        raise SampleSizeError(f"CER z needs at least {MIN_Z_OBS} years, got {n}")

    gamma = null_track.gamma
    r_null = null_track.returns.to_numpy(dtype=float)
    r_alt = alt_track.returns.to_numpy(dtype=float)
    moments = np.column_stack([r_null, r_alt, r_null**2, r_alt**2])
    mu_n, mu_a, m2_n, m2_a = moments.mean(axis=0)

    gain = _moment_cer(mu_a, m2_a, gamma) - _moment_cer(mu_n, m2_n, gamma)
    grad = np.array([-(1.0 + gamma * mu_n), 1.0 + gamma * mu_a, gamma / 2.0, -gamma / 2.0])
    avar = float(grad @ np.cov(moments, rowvar=False, ddof=1) @ grad)
    if gain == 0.0:
        return 0.0, 0.0
    if avar <= 0.0:
        return gain, math.copysign(math.inf, gain)
    return gain, gain / math.sqrt(avar / n)


def turnover(weights: pd.Series) -> float:
    """(1/T) sum_t 2|w_{t+1} - w_t| over the T transitions (risky plus bill leg)"""
    w = np.asarray(weights, dtype=float)
    if len(w) < 2:
        raise SampleSizeError("Turnover needs at least two weights")
    return float(2.0 * np.abs(np.diff(w)).sum() / (len(w) - 1))


def relative_turnover(null_weights: pd.Series, alt_weights: pd.Series) -> float:
    """turnover(alt)/turnover(null); +inf when only the null never trades"""
    null_turnover = turnover(null_weights)
    alt_turnover = turnover(alt_weights)
    if null_turnover == 0.0:
        return 1.0 if alt_turnover == 0.0 else math.inf
    return alt_turnover / null_turnover
