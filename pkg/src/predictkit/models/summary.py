"""
Predictability summary cell models
"""
from typing import List, Optional

from pydantic import BaseModel, Field

from .base import AssetClass


class CellInputs(BaseModel):
    """Upstream statistics the Y/N rules are applied to"""
    country: str
    asset: AssetClass
    t_stats: Optional[List[float]] = Field(None, description="HAC t per predictor")
    oos_r2: Optional[float] = None
    cw_p: Optional[float] = None
    cer_gain: Optional[float] = None


class SummaryCell(BaseModel):
    """One country x asset cell of the predictability summary"""
    country: str
    asset: AssetClass
    is_flag: Optional[bool] = Field(None, description="Significant in-sample slope")
    oos_flag: Optional[bool] = Field(None, description="Positive and significant OOS R2")
    cer_flag: Optional[bool] = Field(None, description="Positive CER gain")
    failed: List[str] = Field(
        default_factory=list, description="Stages that failed for this cell"
    )

    @property
    def consistent(self) -> bool:
        """Both in-sample and out-of-sample evidence"""
        return bool(self.is_flag and self.oos_flag)
