"""
Regression result model
"""
from typing import List, Optional, Tuple

import numpy as np
from pydantic import Field, model_validator

from .base import ResultModel


class RegressionFit(ResultModel):
    """OLS fit with optional Newey-West t-statistics"""
    intercept: float
    slopes: np.ndarray = Field(..., description="One slope per predictor")
    hac_t: Optional[np.ndarray] = Field(None, description="HAC t-statistic per slope")
    r_squared: float = Field(..., ge=0.0, le=1.0)
    n_obs: int = Field(..., gt=0)
    span: Optional[Tuple[int, int]] = Field(None, description="First and last year")
    residuals: np.ndarray
    predictors: List[str] = Field(default_factory=list)
    nw_lags: Optional[int] = Field(None, description="Newey-West lag actually used")
    warnings: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_shapes(self) -> "RegressionFit":
        if len(self.residuals) != self.n_obs:
            raise ValueError("n_obs must equal the residual count")
        if self.hac_t is not None and len(self.hac_t) != len(self.slopes):
            raise ValueError("one HAC t-statistic per slope")
        return self

    @property
    def slope(self) -> float:
        """Slope of a single-predictor regression"""
        return float(self.slopes[0])

    @property
    def t_stat(self) -> Optional[float]:
        return None if self.hac_t is None else float(self.hac_t[0])

    def max_abs_t(self) -> Optional[float]:
        """Largest |HAC t| across predictors"""
        if self.hac_t is None:
            return None
        return float(np.max(np.abs(self.hac_t)))
