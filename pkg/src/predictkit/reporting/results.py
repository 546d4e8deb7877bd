"""
Result containers produced by a pipeline run
"""
from pathlib import Path
from typing import Dict, List, Optional

import pandas as pd
from pydantic import BaseModel, Field

from predictkit.models import (
    AssetClass,
    CellInputs,
    ClarkWestResult,
    EconReport,
    ForecastSet,
    RegressionFit,
    SimOutcome,
    SummaryCell,
)
from predictkit.models.base import ResultModel


class CellFailure(BaseModel):
    """A stage that failed for one cell (or for a pooled simulation)"""
    country: str
    asset: AssetClass
    stage: str
    error_type: str
    detail: str


class CellResult(ResultModel):
    """Everything computed for one country x asset cell"""
    country: str
    asset: AssetClass
    regression: Optional[RegressionFit] = None
    forecasts: Optional[ForecastSet] = None
    oos_r2: Optional[float] = None
    clark_west: Optional[ClarkWestResult] = None
    econ: Optional[EconReport] = None
    growth: Optional[RegressionFit] = None
    failures: List[CellFailure] = Field(default_factory=list)

    def inputs(self) -> CellInputs:
        """Statistics the summary classifier needs"""
        t_stats = None
        if self.regression is not None and self.regression.hac_t is not None:
            t_stats = [float(t) for t in self.regression.hac_t]
        return CellInputs(
            country=self.country,
            asset=self.asset,
            t_stats=t_stats,
            oos_r2=self.oos_r2,
            cw_p=None if self.clark_west is None else self.clark_west.p_value,
            cer_gain=None if self.econ is None else self.econ.cer_gain,
        )

    @property
    def failed_stages(self) -> List[str]:
        return [f.stage for f in self.failures]


class RunResult(ResultModel):
    """Outcome of run_pipeline"""
    output_dir: Path
    cells: List[CellResult] = Field(default_factory=list)
    summary: List[SummaryCell] = Field(default_factory=list)
    summary_stats: Optional[pd.DataFrame] = None
    simulations: Dict[str, SimOutcome] = Field(default_factory=dict)
    failures: List[CellFailure] = Field(default_factory=list)
    files: List[Path] = Field(default_factory=list)

    @property
    def partial(self) -> bool:
        return bool(self.failures)
