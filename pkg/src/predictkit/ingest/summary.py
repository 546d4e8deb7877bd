"""
Descriptive statistics of the derived series
"""
from typing import Iterable

import pandas as pd

from predictkit.models import DerivedSeries

from .transforms import summarize_series

SUMMARY_COLUMNS = [
    "country", "asset", "variable", "n_obs", "mean", "sd", "min", "q1", "median", "q3", "max"
]


def summary_table(series: Iterable[DerivedSeries]) -> pd.DataFrame:
    """
    Per (country, asset) summary rows of the excess return and own payout ratio.

    Representative portfolios contribute their excess-return row only.
    """
    rows = []
    for item in series:
        variables = {f"{item.asset.value.capitalize()} Excess Return": item.excess_return}
        if not item.asset.is_portfolio:
            variables[item.asset.payout_label.upper()] = item.own_payout
        for label, values in variables.items():
            if values.empty:
                continue
            stats = summarize_series(values)
            rows.append(
                {
                    "country": item.country,
                    "asset": item.asset.value,
                    "variable": label,
                    **stats.model_dump(),
                }
            )
    return pd.DataFrame(rows, columns=SUMMARY_COLUMNS)
