"""
Out-of-sample R-squared and the Clark-West test
"""
import logging
from typing import Optional

import numpy as np
from scipy.stats import norm

from predictkit.econometrics import newey_west_cov
from predictkit.exceptions import DegenerateError, SampleSizeError
from predictkit.models import ClarkWestResult, ForecastSet

logger = logging.getLogger(__name__)

MIN_CW_ROWS = 5


def oos_r2(forecasts: ForecastSet) -> float:
    """1 - SSE(alt)/SSE(null) over the forecast years"""
    if len(forecasts) < 2:
        raise SampleSizeError("Out-of-sample R2 needs at least two forecasts")
    actual = forecasts.actual
    sse_alt = float(np.sum((actual - forecasts.alt) ** 2))
    sse_null = float(np.sum((actual - forecasts.null) ** 2))
    if sse_null == 0.0:
        raise DegenerateError("Historical-mean forecast errors are all zero")
    return 1.0 - sse_alt / sse_null


def mspe_adjusted(forecasts: ForecastSet) -> np.ndarray:
    """Per-year (e_null^2 - e_alt^2 + (null - alt)^2)"""
    actual, null, alt = forecasts.actual, forecasts.null, forecasts.alt
    return (actual - null) ** 2 - (actual - alt) ** 2 + (null - alt) ** 2


def clark_west(forecasts: ForecastSet, hac_lags: Optional[int] = None) -> ClarkWestResult:
    """
    One-sided MSPE-adjusted test of the nested predictive model.

    The standard error of the mean adjustment is the i.i.d. one (n-1
    denominator) unless ``hac_lags`` asks for a Newey-West estimate.
    """
    n = len(forecasts)
    if n < MIN_CW_ROWS:
        raise SampleSizeError(f"Clark-West needs at least {MIN_CW_ROWS} forecasts, got {n}")

    adj = mspe_adjusted(forecasts)
    mean = float(adj.mean())
    if np.ptp(adj) == 0.0:
        logger.debug("Clark-West adjustment has zero variance, reporting p = 0.5")
        return ClarkWestResult(
            statistic=0.0, p_value=0.5, n_obs=n, degenerate=True, hac_lags=hac_lags
        )

    if hac_lags is None:
        se = float(adj.std(ddof=1)) / np.sqrt(n)
    else:
        cov, _ = newey_west_cov(np.ones((n, 1)), adj - mean, hac_lags)
        se = float(np.sqrt(cov[0, 0]))

    statistic = mean / se
    return ClarkWestResult(
        statistic=statistic,
        p_value=float(norm.sf(statistic)),
        n_obs=n,
        hac_lags=hac_lags,
    )
