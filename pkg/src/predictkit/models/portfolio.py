"""
Portfolio backtest models
"""
from typing import List

import numpy as np
import pandas as pd
from pydantic import Field, model_validator

from .base import ResultModel

MAX_WEIGHT = 1.5


class PortfolioTrack(ResultModel):
    """Risky weights and realized simple portfolio returns by year"""
    weights: pd.Series = Field(..., description="Risky-asset weight in [0, 1.5]")
    returns: pd.Series = Field(..., description="Realized simple portfolio return")
    bill_returns: pd.Series = Field(..., description="Simple bill return")
    gamma: float = Field(5.0, gt=0)
    flags: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_track(self) -> "PortfolioTrack":
        w = self.weights.to_numpy(dtype=float)
        if np.any(w < 0.0) or np.any(w > MAX_WEIGHT):
            raise ValueError("weights must lie in [0, 1.5]")
        if not self.weights.index.equals(self.returns.index):
            raise ValueError("weights and returns must share the year index")
        if not self.returns.index.equals(self.bill_returns.index):
            raise ValueError("returns and bill returns must share the year index")
        return self

    def __len__(self) -> int:
        return len(self.returns)

    @property
    def years(self) -> List[int]:
        return [int(y) for y in self.returns.index]

    @property
    def excess(self) -> np.ndarray:
        """Simple portfolio return over the bill"""
        return self.returns.to_numpy(dtype=float) - self.bill_returns.to_numpy(dtype=float)


class EconReport(ResultModel):
    """Economic value of the predictive forecast against the historical mean"""
    null_sharpe: float
    alt_sharpe: float
    null_cer: float = Field(..., description="CER of the null track in percent")
    alt_cer: float = Field(..., description="CER of the alt track in percent")
    cer_gain: float = Field(..., description="alt minus null CER, percentage points")
    cer_z: float
    relative_turnover: float = Field(..., ge=0.0, description="alt/null, may be +inf")
    relative_turnover_inverse: float = Field(..., ge=0.0, description="null/alt")
    gamma: float = 5.0
    n_years: int
    flags: List[str] = Field(default_factory=list)

    @property
    def overflow(self) -> bool:
        return "cer_overflow" in self.flags
