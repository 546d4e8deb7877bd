"""
Ordinary least squares with Newey-West HAC inference
"""
import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np

from predictkit.exceptions import SampleSizeError, SingularityError
from predictkit.models import RegressionFit

logger = logging.getLogger(__name__)

# Variance floor after numerical noise
VARIANCE_FLOOR = np.finfo(float).tiny


def add_constant(x: np.ndarray) -> np.ndarray:
    """Prepend an intercept column"""
    x = np.asarray(x, dtype=float)
    if x.ndim == 1:
        x = x[:, None]
    return np.column_stack([np.ones(len(x)), x])


def default_nw_lags(n_obs: int) -> int:
    """Plug-in Newey-West lag, floor(4 (n/100)^(2/9))"""
    return int(math.floor(4.0 * (n_obs / 100.0) ** (2.0 / 9.0)))


def bartlett_weights(lags: int) -> np.ndarray:
    """Bartlett kernel weights for lags 0..lags"""
    return 1.0 - np.arange(lags + 1) / (lags + 1.0)


def ols(
    y: np.ndarray,
    X: np.ndarray,
    predictors: Optional[Sequence[str]] = None,
    span: Optional[Tuple[int, int]] = None,
) -> RegressionFit:
    """
    OLS of y on X, where the first column of X is the intercept.

    Rows with absent values must be removed before the call.
    """
    y = np.asarray(y, dtype=float)
    X = np.asarray(X, dtype=float)
    n_obs, n_cols = X.shape
    if len(y) != n_obs:
        raise SampleSizeError(f"y has {len(y)} rows but X has {n_obs}")
    if n_obs <= n_cols:
        raise SampleSizeError(f"{n_obs} observations for {n_cols} coefficients")
    if np.linalg.matrix_rank(X) < n_cols:
        raise SingularityError("Design matrix does not have full column rank")

    beta, *_ = np.linalg.lstsq(X, y, rcond=None)
    residuals = y - X @ beta
    ssr = float(residuals @ residuals)
    centered = y - y.mean()
    sst = float(centered @ centered)
    r_squared = 0.0 if sst == 0.0 else float(np.clip(1.0 - ssr / sst, 0.0, 1.0))

    return RegressionFit(
        intercept=float(beta[0]),
        slopes=beta[1:],
        r_squared=r_squared,
        n_obs=n_obs,
        span=span,
        residuals=residuals,
        predictors=list(predictors or [f"x{i}" for i in range(1, n_cols)]),
    )


def hac_meat(scores: np.ndarray, lags: int) -> np.ndarray:
    """S = G0 + sum_l w_l (G_l + G_l') over the score rows x_t e_t"""
    weights = bartlett_weights(lags)
    S = scores.T @ scores
    for lag in range(1, lags + 1):
        gamma = scores[lag:].T @ scores[:-lag]
        S += weights[lag] * (gamma + gamma.T)
    return S


def newey_west_cov(
    X: np.ndarray, residuals: np.ndarray, lags: int
) -> Tuple[np.ndarray, List[str]]:
    """Sandwich covariance (X'X)^-1 S (X'X)^-1 with clamped variances"""
    X = np.asarray(X, dtype=float)
    residuals = np.asarray(residuals, dtype=float)
    if lags < 0:
        raise ValueError("lags must be non-negative")
    if lags >= len(residuals):
        raise SampleSizeError(f"{lags} lags need more than {len(residuals)} observations")

    bread = np.linalg.inv(X.T @ X)
    meat = hac_meat(X * residuals[:, None], lags)
    cov = bread @ meat @ bread
    cov = (cov + cov.T) / 2.0

    warnings = []
    diag = np.diag(cov).copy()
    clamped = diag <= 0.0
    if clamped.any():
        message = f"HAC variance clamped for coefficients {np.flatnonzero(clamped).tolist()}"
        logger.warning(message)
        warnings.append(message)
        diag[clamped] = VARIANCE_FLOOR
        np.fill_diagonal(cov, diag)
    return cov, warnings


def newey_west_t(
    fit: RegressionFit, X: np.ndarray, lags: int
) -> Tuple[np.ndarray, List[str]]:
    """HAC t-statistics of the slopes"""
    cov, warnings = newey_west_cov(X, fit.residuals, lags)
    se = np.sqrt(np.diag(cov))[1:]
    return fit.slopes / se, warnings


def with_hac(fit: RegressionFit, X: np.ndarray, lags: Optional[int] = None) -> RegressionFit:
    """Attach Newey-West t-statistics; the plug-in lag is used when lags is None"""
    lags = default_nw_lags(fit.n_obs) if lags is None else lags
    t_stats, warnings = newey_west_t(fit, X, lags)
    return fit.model_copy(
        update={
            "hac_t": t_stats,
            "nw_lags": lags,
            "warnings": [*fit.warnings, *warnings],
        }
    )
