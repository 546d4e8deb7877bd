"""
Derived per-(country, asset) series
"""
from typing import Dict, List, Optional

import numpy as np
import pandas as pd
from pydantic import BaseModel, Field, model_validator

from .base import AssetClass, ResultModel


class DerivedSeries(ResultModel):
    """Log excess returns, log payout-price ratios and log payout growth by year"""
    country: str
    asset: AssetClass
    excess_return: pd.Series = Field(..., description="Log excess return by year")
    payout_price: Dict[str, pd.Series] = Field(
        default_factory=dict,
        description="Log payout-price ratios keyed by cp/dp/rp",
    )
    payout_growth: Optional[pd.Series] = Field(
        None, description="Log payout growth (equity/housing only)"
    )
    asset_return: pd.Series = Field(..., description="Simple asset return by year")
    bill_return: pd.Series = Field(..., description="Simple bill return by year")

    @model_validator(mode="after")
    def _check_series(self) -> "DerivedSeries":
        for label, values in self.payout_price.items():
            if not np.isfinite(values.to_numpy(dtype=float)).all():
                raise ValueError(f"payout ratio {label} must be finite where present")
        if self.payout_growth is not None and not self.asset.has_payout_growth:
            raise ValueError(f"{self.asset.value} carries no payout growth")
        return self

    @property
    def key(self) -> str:
        return f"{self.country}/{self.asset.value}"

    @property
    def predictor_labels(self) -> List[str]:
        """Default predictors: own ratio, or all three for portfolios"""
        if self.asset.is_portfolio:
            return [label for label in ("cp", "dp", "rp") if label in self.payout_price]
        return [self.asset.payout_label]

    @property
    def own_payout(self) -> pd.Series:
        """The asset's own log payout-price ratio"""
        return self.payout_price[self.asset.payout_label]

    def predictors(self, labels: Optional[List[str]] = None) -> pd.DataFrame:
        """Payout-price ratios as a year-indexed frame (absent years are NaN rows)"""
        labels = labels or self.predictor_labels
        return pd.concat({label: self.payout_price[label] for label in labels}, axis=1)

    def frame(self) -> pd.DataFrame:
        """All carried series outer-joined on year"""
        columns = {"excess_return": self.excess_return}
        columns.update(self.payout_price)
        if self.payout_growth is not None:
            columns["payout_growth"] = self.payout_growth
        columns["asset_return"] = self.asset_return
        columns["bill_return"] = self.bill_return
        frame = pd.concat(columns, axis=1).sort_index()
        frame.index.name = "year"
        return frame


class SeriesSummary(BaseModel):
    """Descriptive statistics of one series"""
    n_obs: int
    mean: float
    sd: float
    min: float
    q1: float
    median: float
    q3: float
    max: float
