"""
Derivation of regression-ready series from the observation panel
"""
import logging
from pathlib import Path
from typing import Dict, Iterable, Union

import numpy as np
import pandas as pd

from predictkit.models import (
    ALL_PAYOUT_LABELS,
    AssetClass,
    ColumnConfig,
    DerivedSeries,
    ObservationPanel,
)
from predictkit.models.base import PAYOUT_LABELS
from predictkit.models.panel import portfolio_components

from .portfolios import build_representative_portfolio
from .transforms import coupon_price_from_yield, log_excess_return, payout_growth, winsorize

logger = logging.getLogger(__name__)

LABEL_ASSETS = {label: asset for asset, label in PAYOUT_LABELS.items()}


def _empty() -> pd.Series:
    return pd.Series(dtype=float, index=pd.Index([], name="year"))


def _joint(columns: Dict[str, pd.Series]) -> pd.DataFrame:
    """Years where every input is present"""
    frame = pd.concat(columns, axis=1).sort_index().dropna()
    frame.index.name = "year"
    return frame


def _drop_invalid(
    frame: pd.DataFrame, invalid: pd.Series, what: str, key: str
) -> pd.DataFrame:
    if invalid.any():
        years = ", ".join(str(y) for y in frame.index[invalid])
        logger.warning(f"{key}: dropped {what} for years {years}")
    return frame[~invalid]


def _excess_return(asset_return: pd.Series, bill_return: pd.Series, key: str) -> pd.Series:
    frame = _joint({"ret": asset_return, "bill": bill_return})
    invalid = (frame["ret"] <= -1.0) | (frame["bill"] <= -1.0)
    frame = _drop_invalid(frame, invalid, "excess return (return <= -1)", key)
    if frame.empty:
        return _empty()
    return log_excess_return(frame["ret"], frame["bill"])


def _payout_level(
    panel: ObservationPanel, config: ColumnConfig, country: str, asset: AssetClass
) -> pd.Series:
    column = config.columns_for(asset).payout
    return panel.series(country, column) if column else _empty()


def _log_payout(
    panel: ObservationPanel, config: ColumnConfig, country: str, asset: AssetClass
) -> pd.Series:
    """Log payout-price ratio of a single asset; coupon-price backed out for bonds"""
    key = f"{country}/{asset.value}"
    level = _payout_level(panel, config, country, asset)
    if asset is AssetClass.BOND:
        total = panel.series(country, config.columns_for(asset).total_return)
        frame = _joint({"yield": level, "ret": total})
        invalid = (frame["yield"] <= 0.0) | (1.0 + frame["ret"] - frame["yield"] <= 0.0)
        frame = _drop_invalid(frame, invalid, "coupon-price ratio", key)
        if frame.empty:
            return _empty()
        return coupon_price_from_yield(frame["yield"], frame["ret"])

    frame = _joint({"ratio": level})
    frame = _drop_invalid(frame, frame["ratio"] <= 0.0, "non-positive payout ratio", key)
    return np.log(frame["ratio"])


def _payout_growth(level: pd.Series, total_return: pd.Series, key: str) -> pd.Series:
    """Payout growth at t needs the ratio at t and t-1 and the return at t"""
    previous = level.copy()
    previous.index = previous.index + 1
    frame = _joint({"prev": previous, "curr": level, "ret": total_return})
    invalid = (frame["prev"] <= 0.0) | (frame["curr"] <= 0.0) | (frame["ret"] <= -1.0)
    frame = _drop_invalid(frame, invalid, "payout growth", key)
    if frame.empty:
        return _empty()
    return payout_growth(frame["prev"], frame["curr"], frame["ret"])


def _maybe_winsorize(series: pd.Series, config: ColumnConfig) -> pd.Series:
    if not config.winsorize:
        return series
    lower, upper = config.winsorize_limits
    return winsorize(series, lower, upper)


def _portfolio_returns(
    panel: ObservationPanel, config: ColumnConfig, country: str, asset: AssetClass
) -> pd.Series:
    returns, caps = {}, {}
    for component in portfolio_components(asset):
        columns = config.columns_for(component)
        returns[component.value] = panel.series(country, columns.total_return)
        caps[component.value] = panel.series(country, columns.capitalization)
    bill = panel.series(country, config.bill_return)
    if asset is AssetClass.WEALTH:
        returns["bill"] = bill
        caps["bill"] = panel.series(country, config.bill_capitalization)
    simple, _ = build_representative_portfolio(
        asset, pd.concat(returns, axis=1), pd.concat(caps, axis=1), bill
    )
    return simple


def derive_series(
    panel: ObservationPanel, config: ColumnConfig, country: str, asset: AssetClass
) -> DerivedSeries:
    """
    Build the DerivedSeries of one (country, asset).

    Years where a transformation is undefined (a return of -100% or worse, a
    non-positive implied price) are dropped with a warning, other years kept.
    """
    config.validate_for([asset])
    key = f"{country}/{asset.value}"
    bill = panel.series(country, config.bill_return)

    if asset.is_portfolio:
        asset_return = _portfolio_returns(panel, config, country, asset)
        labels = ALL_PAYOUT_LABELS
    else:
        asset_return = panel.series(country, config.columns_for(asset).total_return)
        labels = (asset.payout_label,)

    excess = _maybe_winsorize(_excess_return(asset_return, bill, key), config)
    payout_price = {
        label: _maybe_winsorize(
            _log_payout(panel, config, country, LABEL_ASSETS[label]), config
        )
        for label in labels
    }

    growth = None
    if asset.has_payout_growth:
        level = _payout_level(panel, config, country, asset)
        growth = _payout_growth(level, asset_return, key)

    logger.debug(
        f"{key}: {len(excess)} excess-return years, "
        f"{', '.join(f'{k}={len(v)}' for k, v in payout_price.items())}"
    )
    return DerivedSeries(
        country=country,
        asset=asset,
        excess_return=excess.rename("excess_return"),
        payout_price={k: v.rename(k) for k, v in payout_price.items()},
        payout_growth=growth.rename("payout_growth") if growth is not None else None,
        asset_return=asset_return.rename("asset_return"),
        bill_return=bill.rename("bill_return"),
    )


def dump_derived(
    series: Iterable[DerivedSeries], path: Union[str, Path], sep: str = ","
) -> Path:
    """Write derived series as one delimited row per (country, asset, year)"""
    frames = []
    for item in series:
        frame = item.frame().reset_index()
        frame.insert(0, "asset", item.asset.value)
        frame.insert(0, "country", item.country)
        frames.append(frame)
    columns = ["country", "asset", "year", "excess_return", *ALL_PAYOUT_LABELS]
    columns += ["payout_growth", "asset_return", "bill_return"]
    out = pd.concat(frames, ignore_index=True) if frames else pd.DataFrame()
    out = out.reindex(columns=columns)
    path = Path(path)
    out.to_csv(path, sep=sep, index=False, na_rep="")
    logger.info(f"Wrote {len(out)} derived rows to {path}")
    return path
