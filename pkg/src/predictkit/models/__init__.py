"""
Domain models for predictkit
"""
from .base import ALL_PAYOUT_LABELS, SINGLE_ASSETS, AssetClass, ResultModel
from .forecast import ClarkWestResult, ForecastSet
from .panel import AssetColumns, ColumnConfig, ObservationPanel
from .portfolio import MAX_WEIGHT, EconReport, PortfolioTrack
from .regression import RegressionFit
from .series import DerivedSeries, SeriesSummary
from .simulation import NullParams, ShockMode, SimOutcome, VarParams
from .summary import CellInputs, SummaryCell

__all__ = [
    "ALL_PAYOUT_LABELS",
    "SINGLE_ASSETS",
    "AssetClass",
    "ResultModel",
    "ClarkWestResult",
    "ForecastSet",
    "AssetColumns",
    "ColumnConfig",
    "ObservationPanel",
    "MAX_WEIGHT",
    "EconReport",
    "PortfolioTrack",
    "RegressionFit",
    "DerivedSeries",
    "SeriesSummary",
    "NullParams",
    "ShockMode",
    "SimOutcome",
    "VarParams",
    "CellInputs",
    "SummaryCell",
]
