"""
Expanding-window one-year-ahead forecasts
"""
import logging
from typing import Optional, Union

import numpy as np
import pandas as pd

from predictkit.econometrics import add_constant, lag_one_year, ols
from predictkit.exceptions import SampleSizeError, SingularityError
from predictkit.models import DerivedSeries, ForecastSet

logger = logging.getLogger(__name__)

DEFAULT_MIN_TRAIN = 20


def expanding_forecasts(
    y: pd.Series,
    x: Union[pd.Series, pd.DataFrame],
    min_train: int = DEFAULT_MIN_TRAIN,
    key: Optional[str] = None,
) -> ForecastSet:
    """
    Historical-mean and predictive-regression forecasts of y.

    ``x`` holds the predictors at their own year; the value at t-1 forecasts
    y at t. The regression for a target year is fit on the joint
    observations strictly before it, and the first target is joint
    observation min_train + 1. The null forecast is the mean of every
    realized y before the target year, including years where x is absent.
    """
    key = key or str(y.name)
    if isinstance(x, pd.Series):
        x = x.to_frame(x.name or "x")
    lagged = lag_one_year(x)
    joint = pd.concat({"y": y, **{c: lagged[c] for c in lagged.columns}}, axis=1)
    joint = joint.dropna().sort_index()
    if len(joint) < min_train + 1:
        raise SampleSizeError(
            f"{key}: {len(joint)} joint observations, need at least {min_train + 1}"
        )

    target = joint["y"].to_numpy(dtype=float)
    history = y.dropna().sort_index()
    history_years = history.index.to_numpy()
    history_values = history.to_numpy(dtype=float)
    design = add_constant(joint[list(lagged.columns)].to_numpy(dtype=float))

    rows = []
    for i in range(min_train, len(joint)):
        year = joint.index[i]
        # every realized y before the target year, joint or not
        null = float(history_values[: np.searchsorted(history_years, year)].mean())
        degraded = False
        try:
            fit = ols(target[:i], design[:i])
            alt = float(fit.intercept + design[i, 1:] @ fit.slopes)
        except (SingularityError, SampleSizeError):
            logger.warning(f"{key}: rank-deficient window before {year}, using null")
            alt, degraded = null, True
        rows.append(
            {
                "year": int(year),
                "actual": float(target[i]),
                "null": null,
                "alt": alt,
                "degraded": degraded,
            }
        )

    frame = pd.DataFrame(rows).set_index("year")
    predictors = joint[list(lagged.columns)].iloc[min_train:].copy()
    predictors.index = frame.index
    return ForecastSet(
        start_year=int(frame.index[0]),
        min_train=min_train,
        rows=frame,
        lagged_predictors=predictors,
    )


def series_forecasts(
    series: DerivedSeries, min_train: int = DEFAULT_MIN_TRAIN
) -> ForecastSet:
    """Forecasts of a derived series from its default payout-price predictors"""
    return expanding_forecasts(
        series.excess_return,
        series.predictors(),
        min_train=min_train,
        key=series.key,
    )
