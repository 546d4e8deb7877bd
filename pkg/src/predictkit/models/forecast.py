"""
Out-of-sample forecast models
"""
from typing import List, Optional

import numpy as np
import pandas as pd
from pydantic import Field, model_validator

from .base import ResultModel

FORECAST_COLUMNS = ["actual", "null", "alt", "degraded"]


class ForecastSet(ResultModel):
    """Expanding-window one-year-ahead forecasts indexed by target year"""
    start_year: int = Field(..., description="First forecast year T1")
    min_train: int = Field(20, gt=0)
    rows: pd.DataFrame = Field(..., description="actual/null/alt/degraded by year")
    lagged_predictors: pd.DataFrame = Field(
        ..., description="x_{t-1} used for each forecast year"
    )

    @model_validator(mode="after")
    def _check_rows(self) -> "ForecastSet":
        missing = [c for c in FORECAST_COLUMNS if c not in self.rows.columns]
        if missing:
            raise ValueError(f"forecast rows missing columns {missing}")
        if len(self.rows) and int(self.rows.index[0]) != self.start_year:
            raise ValueError("start_year must be the first forecast year")
        if not self.rows.index.is_monotonic_increasing:
            raise ValueError("forecast years must be increasing")
        return self

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def years(self) -> List[int]:
        return [int(y) for y in self.rows.index]

    @property
    def actual(self) -> np.ndarray:
        return self.rows["actual"].to_numpy(dtype=float)

    @property
    def null(self) -> np.ndarray:
        return self.rows["null"].to_numpy(dtype=float)

    @property
    def alt(self) -> np.ndarray:
        return self.rows["alt"].to_numpy(dtype=float)

    @property
    def degraded_years(self) -> List[int]:
        return [int(y) for y in self.rows.index[self.rows["degraded"].to_numpy(bool)]]


class ClarkWestResult(ResultModel):
    """MSPE-adjusted statistic with its one-sided p-value"""
    statistic: float
    p_value: float = Field(..., ge=0.0, le=1.0)
    n_obs: int
    degenerate: bool = False
    hac_lags: Optional[int] = None
