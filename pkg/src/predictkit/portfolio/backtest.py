"""
Economic value of return forecasts for a mean-variance investor
"""
import logging
import math
from typing import List, Tuple

import pandas as pd

from predictkit.exceptions import DegenerateError
from predictkit.models import DerivedSeries, EconReport, ForecastSet, PortfolioTrack

from .allocation import (
    DEFAULT_GAMMA,
    DEFAULT_WINDOW,
    mv_weight,
    realized_track,
    variance_forecast,
)
from .performance import cer, cer_gain_z, relative_turnover, sharpe

logger = logging.getLogger(__name__)

# CER gains beyond this many percentage points are numerical artifacts
CER_OVERFLOW = 1e6


def _safe_sharpe(track: PortfolioTrack, flags: List[str]) -> float:
    try:
        return sharpe(track)
    except DegenerateError:
        if "sharpe_degenerate" not in flags:
            flags.append("sharpe_degenerate")
        return math.nan


def evaluate_economic_value(
    forecasts: ForecastSet,
    series: DerivedSeries,
    gamma: float = DEFAULT_GAMMA,
    window: int = DEFAULT_WINDOW,
) -> Tuple[EconReport, PortfolioTrack, PortfolioTrack]:
    """
    Backtest historical-mean and predictive weights over the forecast years.

    Years whose forecast variance is zero are flagged and left out of both
    tracks.
    """
    flags = []
    variance = variance_forecast(series.excess_return, forecasts.years, window)
    usable = variance > 0.0
    if not usable.all():
        dropped = [int(y) for y in variance.index[~usable]]
        logger.warning(f"{series.key}: zero forecast variance in {dropped}, years skipped")
        flags.append(f"flagged_years:{len(dropped)}")
    variance = variance[usable]
    rows = forecasts.rows.loc[variance.index]

    null_weights = pd.Series(
        mv_weight(rows["null"].to_numpy(), variance.to_numpy(), gamma), index=variance.index
    )
    alt_weights = pd.Series(
        mv_weight(rows["alt"].to_numpy(), variance.to_numpy(), gamma), index=variance.index
    )
    null_track = realized_track(null_weights, series.asset_return, series.bill_return, gamma)
    alt_track = realized_track(alt_weights, series.asset_return, series.bill_return, gamma)

    null_cer, alt_cer = cer(null_track), cer(alt_track)
    gain = alt_cer - null_cer
    _, z = cer_gain_z(null_track, alt_track)
    if not math.isfinite(gain) or abs(gain) > CER_OVERFLOW:
        logger.warning(f"{series.key}: CER gain {gain:.3g} flagged as overflow")
        flags.append("cer_overflow")

    inverse = relative_turnover(alt_track.weights, null_track.weights)
    report = EconReport(
        null_sharpe=_safe_sharpe(null_track, flags),
        alt_sharpe=_safe_sharpe(alt_track, flags),
        null_cer=null_cer,
        alt_cer=alt_cer,
        cer_gain=gain,
        cer_z=z,
        relative_turnover=relative_turnover(null_track.weights, alt_track.weights),
        relative_turnover_inverse=inverse,
        gamma=gamma,
        n_years=len(null_track),
        flags=flags + null_track.flags,
    )
    return report, null_track, alt_track
