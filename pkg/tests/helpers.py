"""
Builders shared by the test modules
"""
from typing import Iterable, Optional, Sequence

import numpy as np
import pandas as pd

from predictkit.models import (
    AssetClass,
    AssetColumns,
    ColumnConfig,
    DerivedSeries,
    ForecastSet,
    PortfolioTrack,
)

CAP_COLUMNS = {
    "bond": "bond_capital",
    "equity": "eq_capital",
    "housing": "housing_capital",
    "bill": "bill_capital",
}


def column_config(**overrides) -> ColumnConfig:
    """Default mapping with capitalization columns for both portfolios"""
    values = dict(
        bond=AssetColumns(
            total_return="bond_tr", payout="bond_rate", capitalization=CAP_COLUMNS["bond"]
        ),
        equity=AssetColumns(
            total_return="eq_tr", payout="eq_dp", capitalization=CAP_COLUMNS["equity"]
        ),
        housing=AssetColumns(
            total_return="housing_tr",
            payout="housing_rent_yd",
            capitalization=CAP_COLUMNS["housing"],
        ),
        bill_capitalization=CAP_COLUMNS["bill"],
    )
    values.update(overrides)
    return ColumnConfig(**values)


def _ar1(rng: np.random.Generator, n: int, mean: float, phi: float, sd: float) -> np.ndarray:
    x = np.empty(n)
    x[0] = mean
    for t in range(1, n):
        x[t] = mean + phi * (x[t - 1] - mean) + sd * rng.standard_normal()
    return x


def make_panel_frame(
    countries: Sequence[str] = ("Alpha", "Beta"),
    first_year: int = 1950,
    last_year: int = 2009,
    seed: int = 11,
) -> pd.DataFrame:
    """
    Wide synthetic panel with every column the default mapping reads.

    Log payout ratios follow AR(1) paths and returns load on the lagged
    ratio, so the predictive regressions have something to find.
    """
    rng = np.random.default_rng(seed)
    years = np.arange(first_year, last_year + 1)
    n = len(years)
    frames = []
    for country in countries:
        bill = 0.03 + 0.01 * rng.standard_normal(n)
        dp = _ar1(rng, n, -3.3, 0.8, 0.15)
        rp = _ar1(rng, n, -3.0, 0.9, 0.08)
        cp = _ar1(rng, n, -3.0, 0.9, 0.05)

        def log_return(ratio: np.ndarray, slope: float, sd: float) -> np.ndarray:
            lagged = np.concatenate([[ratio[0]], ratio[:-1]])
            return 0.04 + slope * (lagged - ratio.mean()) + sd * rng.standard_normal(n)

        frames.append(
            pd.DataFrame(
                {
                    "country": country,
                    "year": years,
                    "bill_rate": bill,
                    "bond_rate": np.exp(cp),
                    "bond_tr": np.expm1(log_return(cp, 0.1, 0.05)),
                    "eq_dp": np.exp(dp),
                    "eq_tr": np.expm1(log_return(dp, 0.3, 0.15)),
                    "housing_rent_yd": np.exp(rp),
                    "housing_tr": np.expm1(log_return(rp, 0.2, 0.06)),
                    CAP_COLUMNS["bond"]: 50.0 + rng.uniform(0.0, 10.0, n),
                    CAP_COLUMNS["equity"]: 100.0 + rng.uniform(0.0, 20.0, n),
                    CAP_COLUMNS["housing"]: 200.0 + rng.uniform(0.0, 30.0, n),
                    CAP_COLUMNS["bill"]: 20.0 + rng.uniform(0.0, 5.0, n),
                }
            )
        )
    return pd.concat(frames, ignore_index=True)


def forecast_set(
    actual: Iterable[float],
    null: Iterable[float],
    alt: Iterable[float],
    start_year: int = 2000,
    degraded: Optional[Iterable[bool]] = None,
) -> ForecastSet:
    actual = np.asarray(list(actual), dtype=float)
    years = pd.Index(range(start_year, start_year + len(actual)), name="year")
    rows = pd.DataFrame(
        {
            "actual": actual,
            "null": np.asarray(list(null), dtype=float),
            "alt": np.asarray(list(alt), dtype=float),
            "degraded": list(degraded) if degraded is not None else [False] * len(actual),
        },
        index=years,
    )
    return ForecastSet(
        start_year=start_year,
        rows=rows,
        lagged_predictors=pd.DataFrame({"x": np.zeros(len(actual))}, index=years),
    )


def track(
    weights: Iterable[float],
    returns: Iterable[float],
    bills: Optional[Iterable[float]] = None,
    gamma: float = 5.0,
    start_year: int = 2000,
) -> PortfolioTrack:
    returns = list(returns)
    years = pd.Index(range(start_year, start_year + len(returns)), name="year")
    bills = list(bills) if bills is not None else [0.0] * len(returns)
    return PortfolioTrack(
        weights=pd.Series(list(weights), index=years, dtype=float),
        returns=pd.Series(returns, index=years, dtype=float),
        bill_returns=pd.Series(bills, index=years, dtype=float),
        gamma=gamma,
    )


def year_series(values: Iterable[float], start_year: int = 1950, name: str = "x") -> pd.Series:
    values = list(values)
    index = pd.Index(range(start_year, start_year + len(values)), name="year")
    return pd.Series(values, index=index, dtype=float, name=name)


def derived(
    country: str,
    asset: AssetClass,
    excess: pd.Series,
    payout: pd.Series,
    growth: Optional[pd.Series] = None,
) -> DerivedSeries:
    """DerivedSeries of a single asset with flat simple returns"""
    simple = pd.Series(np.expm1(excess.to_numpy()), index=excess.index)
    return DerivedSeries(
        country=country,
        asset=asset,
        excess_return=excess,
        payout_price={asset.payout_label: payout},
        payout_growth=growth,
        asset_return=simple,
        bill_return=pd.Series(0.0, index=excess.index),
    )
