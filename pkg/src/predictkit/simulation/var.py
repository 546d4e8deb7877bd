"""
Pooled VAR estimation and the no-predictability null
"""
import logging
from typing import Iterable, Optional, Sequence, Union

import numpy as np
import pandas as pd

from predictkit.econometrics import add_constant, ols
from predictkit.exceptions import SampleSizeError, UnsupportedAssetError
from predictkit.models import AssetClass, DerivedSeries, NullParams, VarParams

logger = logging.getLogger(__name__)

MIN_VAR_ROWS = 30
VAR_COLUMNS = ["dp_lag", "dp", "dd", "r"]


def linearization_rho(dp: Union[Sequence[float], np.ndarray, pd.Series]) -> float:
    """rho = 1 / (1 + exp(mean dp))"""
    values = np.asarray(dp, dtype=float)
    if values.size == 0:
        raise SampleSizeError("Linearization constant needs at least one dp observation")
    return float(1.0 / (1.0 + np.exp(values.mean())))


def pooled_var_rows(series: Iterable[DerivedSeries]) -> pd.DataFrame:
    """
    Stack (dp_t, dp_{t+1}, dd_{t+1}, r_{t+1}) rows across countries.

    The row year is t+1; only complete rows are kept.
    """
    frames = []
    asset: Optional[AssetClass] = None
    for item in series:
        if not item.asset.has_payout_growth or item.payout_growth is None:
            raise UnsupportedAssetError(f"No payout-growth VAR for {item.asset.value}")
        if asset is not None and item.asset is not asset:
            raise UnsupportedAssetError("Pooled VAR rows must share one asset class")
        asset = item.asset
        dp = item.own_payout
        lagged = dp.copy()
        lagged.index = lagged.index + 1
        frame = pd.concat(
            {"dp_lag": lagged, "dp": dp, "dd": item.payout_growth, "r": item.excess_return},
            axis=1,
        ).dropna()
        frame.index.name = "year"
        frame = frame.reset_index()
        frame.insert(0, "country", item.country)
        frames.append(frame)
    if not frames:
        return pd.DataFrame(columns=["country", "year", *VAR_COLUMNS])
    return pd.concat(frames, ignore_index=True)


def estimate_var_params(
    rows: pd.DataFrame, asset: Optional[AssetClass] = None, demean: bool = False
) -> VarParams:
    """
    OLS slopes of dp_{t+1}, dd_{t+1} and r_{t+1} on dp_t over the pooled rows.

    rho always comes from the raw pooled dp; ``demean`` removes country
    means before the slopes are estimated.
    """
    if len(rows) < MIN_VAR_ROWS:
        raise SampleSizeError(f"{len(rows)} pooled rows, need {MIN_VAR_ROWS}")

    raw_dp = rows["dp_lag"].to_numpy(dtype=float)
    rho = linearization_rho(raw_dp)

    data = rows[VAR_COLUMNS].astype(float)
    if demean:
        data = data - rows.groupby("country")[VAR_COLUMNS].transform("mean")

    design = add_constant(data["dp_lag"].to_numpy())
    fit_dp = ols(data["dp"].to_numpy(), design, predictors=["dp"])
    fit_dd = ols(data["dd"].to_numpy(), design, predictors=["dp"])
    fit_r = ols(data["r"].to_numpy(), design, predictors=["dp"])

    residuals = np.column_stack([fit_dp.residuals, fit_dd.residuals])
    shock_cov = np.cov(residuals, rowvar=False, ddof=1)
    params = VarParams(
        asset=asset,
        rho=rho,
        phi=fit_dp.slope,
        b_d=fit_dd.slope,
        b_r=fit_r.slope,
        shock_cov=shock_cov,
        n_obs=len(rows),
        dp_mean=float(raw_dp.mean()),
        dp_sd=float(raw_dp.std(ddof=1)),
        residuals=residuals,
        demeaned=demean,
    )
    logger.info(
        f"VAR{f' ({asset.value})' if asset else ''}: rho={rho:.3f} phi={params.phi:.3f} "
        f"b_d={params.b_d:.3f} b_r={params.b_r:.3f} over {params.n_obs} rows, "
        f"identity residual {params.identity_residual:.4f}"
    )
    return params


def null_params(params: VarParams) -> NullParams:
    """phi_0 = phi, b_r0 = 0, b_d0 = rho phi - 1"""
    return NullParams(phi=params.phi, b_d=params.rho * params.phi - 1.0, b_r=0.0)
