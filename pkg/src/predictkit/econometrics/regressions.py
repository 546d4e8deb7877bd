"""
Predictive and payout-growth regressions on derived series
"""
import logging
from typing import List, Optional

import pandas as pd

from predictkit.exceptions import SampleSizeError, UnsupportedAssetError
from predictkit.models import DerivedSeries, RegressionFit

from .ols import add_constant, ols, with_hac

logger = logging.getLogger(__name__)

MIN_REGRESSION_OBS = 10


def lag_one_year(frame: pd.DataFrame) -> pd.DataFrame:
    """Re-key values at year t-1 to year t"""
    lagged = frame.copy()
    lagged.index = lagged.index + 1
    return lagged


def regress(
    y: pd.Series,
    X: pd.DataFrame,
    lags: Optional[int] = None,
    min_obs: int = MIN_REGRESSION_OBS,
) -> RegressionFit:
    """
    OLS with HAC t-statistics on the years where y and every column of X exist.
    """
    joint = pd.concat({"y": y, **{c: X[c] for c in X.columns}}, axis=1).dropna()
    if len(joint) < min_obs:
        raise SampleSizeError(f"{len(joint)} aligned observations, need {min_obs}")
    joint = joint.sort_index()
    design = add_constant(joint[list(X.columns)].to_numpy(dtype=float))
    span = (int(joint.index[0]), int(joint.index[-1]))
    fit = ols(joint["y"].to_numpy(dtype=float), design, predictors=list(X.columns), span=span)
    return with_hac(fit, design, lags)


def predictive_regression(
    series: DerivedSeries,
    predictors: Optional[List[str]] = None,
    lags: Optional[int] = None,
) -> RegressionFit:
    """Excess return at t on the lagged log payout-price ratio(s) at t-1"""
    labels = predictors or series.predictor_labels
    x = lag_one_year(series.predictors(labels))
    fit = regress(series.excess_return, x, lags)
    logger.debug(
        f"{series.key}: slopes {fit.slopes.round(3).tolist()} over {fit.span}, "
        f"R2 {fit.r_squared:.3f}, {fit.nw_lags} NW lags"
    )
    return fit


def payout_growth_regression(
    series: DerivedSeries, lags: Optional[int] = None
) -> RegressionFit:
    """Payout growth at t on the lagged log payout-price ratio"""
    if not series.asset.has_payout_growth or series.payout_growth is None:
        raise UnsupportedAssetError(
            f"No payout-growth regression for {series.asset.value}; coupons are fixed"
        )
    label = series.asset.payout_label
    x = lag_one_year(series.predictors([label]))
    return regress(series.payout_growth, x, lags)
