"""
Out-of-sample forecasting and evaluation
"""
from .evaluation import clark_west, mspe_adjusted, oos_r2
from .harness import DEFAULT_MIN_TRAIN, expanding_forecasts, series_forecasts

__all__ = [
    "clark_west",
    "mspe_adjusted",
    "oos_r2",
    "DEFAULT_MIN_TRAIN",
    "expanding_forecasts",
    "series_forecasts",
]
