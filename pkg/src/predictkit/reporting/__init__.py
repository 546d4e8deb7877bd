"""
Pipeline orchestration, report tables and the CLI
"""
from .cache import SeriesCache, get_series_cache
from .errors import ExitCode, exit_code_for, run_with_exit_code
from .pipeline import Stage, evaluate_cell, run_pipeline, simulate_asset
from .results import CellFailure, CellResult, RunResult
from .summary import classify_summary
from .tables import (
    draws_table,
    economic_table,
    growth_table,
    histogram_table,
    oos_table,
    regression_table,
    simulation_params_table,
    summary_grid,
    summary_stats_tables,
)
from .writers import TableWriter

__all__ = [
    "SeriesCache",
    "get_series_cache",
    "ExitCode",
    "exit_code_for",
    "run_with_exit_code",
    "Stage",
    "evaluate_cell",
    "run_pipeline",
    "simulate_asset",
    "CellFailure",
    "CellResult",
    "RunResult",
    "classify_summary",
    "draws_table",
    "economic_table",
    "growth_table",
    "histogram_table",
    "oos_table",
    "regression_table",
    "simulation_params_table",
    "summary_grid",
    "summary_stats_tables",
    "TableWriter",
]
