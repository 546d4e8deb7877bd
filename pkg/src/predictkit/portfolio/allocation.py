"""
Mean-variance weights and realized portfolio tracks
"""
import logging
from typing import Iterable, Union

import numpy as np
import pandas as pd

from predictkit.exceptions import DomainError, SampleSizeError
from predictkit.models import MAX_WEIGHT, PortfolioTrack

logger = logging.getLogger(__name__)

DEFAULT_GAMMA = 5.0
DEFAULT_WINDOW = 20


def mv_weight(
    forecast: Union[float, np.ndarray],
    variance: Union[float, np.ndarray],
    gamma: float = DEFAULT_GAMMA,
) -> Union[float, np.ndarray]:
    """Risky weight (1/gamma) r/var clamped to [0, 1.5]"""
    r = np.asarray(forecast, dtype=float)
    var = np.asarray(variance, dtype=float)
    if np.any(var <= 0.0):
        raise DomainError("Forecast variance must be positive")
    weight = np.clip(r / (gamma * var), 0.0, MAX_WEIGHT)
    return float(weight) if weight.ndim == 0 else weight


def variance_forecast(
    history: pd.Series, years: Iterable[int], window: int = DEFAULT_WINDOW
) -> pd.Series:
    """Sample variance of the last ``window`` observations strictly before each year"""
    history = history.dropna().sort_index()
    out = {}
    for year in years:
        past = history[history.index < year]
        if len(past) < window:
            raise SampleSizeError(
                f"{len(past)} observations before {year}, variance window needs {window}"
            )
        out[int(year)] = float(past.iloc[-window:].var(ddof=1))
    return pd.Series(out, dtype=float, name="variance").rename_axis("year")


def to_simple(log_returns: Union[pd.Series, np.ndarray]) -> Union[pd.Series, np.ndarray]:
    """exp(r) - 1"""
    return np.expm1(log_returns)


def realized_track(
    weights: pd.Series,
    asset_returns: pd.Series,
    bill_returns: pd.Series,
    gamma: float = DEFAULT_GAMMA,
    log_inputs: bool = False,
) -> PortfolioTrack:
    """
    R_p = R_f + w (R_a - R_f) in simple-return space.

    Years without an asset or bill return are skipped and flagged.
    """
    if log_inputs:
        asset_returns, bill_returns = to_simple(asset_returns), to_simple(bill_returns)
    frame = pd.concat(
        {"w": weights, "asset": asset_returns, "bill": bill_returns}, axis=1
    ).reindex(weights.index)
    missing = frame.isna().any(axis=1)
    flags = []
    if missing.any():
        skipped = [int(y) for y in frame.index[missing]]
        logger.warning(f"Portfolio track skips years without returns: {skipped}")
        flags = [f"skipped:{y}" for y in skipped]
        frame = frame[~missing]

    portfolio = frame["bill"] + frame["w"] * (frame["asset"] - frame["bill"])
    return PortfolioTrack(
        weights=frame["w"].rename("weight"),
        returns=portfolio.rename("portfolio_return"),
        bill_returns=frame["bill"].rename("bill_return"),
        gamma=gamma,
        flags=flags,
    )
