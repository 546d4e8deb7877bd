"""
Mean-variance backtests of return forecasts
"""
from .allocation import (
    DEFAULT_GAMMA,
    DEFAULT_WINDOW,
    mv_weight,
    realized_track,
    to_simple,
    variance_forecast,
)
from .backtest import CER_OVERFLOW, evaluate_economic_value
from .performance import cer, cer_gain_z, relative_turnover, sharpe, turnover

__all__ = [
    "DEFAULT_GAMMA",
    "DEFAULT_WINDOW",
    "mv_weight",
    "realized_track",
    "to_simple",
    "variance_forecast",
    "CER_OVERFLOW",
    "evaluate_economic_value",
    "cer",
    "cer_gain_z",
    "relative_turnover",
    "sharpe",
    "turnover",
]
