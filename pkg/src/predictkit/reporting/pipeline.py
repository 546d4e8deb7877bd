"""
End-to-end evaluation run over every configured country x asset cell
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from typing import Callable, Dict, Iterable, List, Optional, Tuple, TypeVar

import pandas as pd

from predictkit.econometrics import payout_growth_regression, predictive_regression
from predictkit.exceptions import ConfigurationError, PredictKitError
from predictkit.forecasting import clark_west, oos_r2, series_forecasts
from predictkit.ingest import dump_derived, load_panel, summary_table
from predictkit.models import (
    AssetClass,
    DerivedSeries,
    ObservationPanel,
    SimOutcome,
    SummaryCell,
)
from predictkit.portfolio import evaluate_economic_value
from predictkit.simulation import estimate_var_params, pooled_var_rows, simulate_null
from predictkit.utils.config import RunConfig

from .cache import SeriesCache, get_series_cache
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

logger = logging.getLogger(__name__)

T = TypeVar("T")

POOLED = "pooled"
ASSET_ORDER = {asset: i for i, asset in enumerate(AssetClass)}


class Stage(str, Enum):
    """Groups of outputs a run can produce"""
    TABLES = "tables"
    SIM = "sim"


class _StageRunner:
    """Runs the stages of one cell and records their failures"""

    def __init__(self, country: str, asset: AssetClass):
        self.country = country
        self.asset = asset
        self.failures: List[CellFailure] = []

    def run(self, stage: str, func: Callable[[], T]) -> Optional[T]:
        try:
            return func()
        except PredictKitError as e:
            logger.warning(f"{self.country}/{self.asset.value} {stage} failed: {e.detail}")
            self._record(stage, e, e.detail)
        except Exception as e:
            logger.error(
                f"{self.country}/{self.asset.value} {stage} raised {type(e).__name__}: {e}",
                exc_info=True,
            )
            self._record(stage, e, str(e))
        return None

    def _record(self, stage: str, exc: Exception, detail: str) -> None:
        self.failures.append(
            CellFailure(
                country=self.country,
                asset=self.asset,
                stage=stage,
                error_type=type(exc).__name__,
                detail=detail,
            )
        )


def _cells(panel: ObservationPanel, config: RunConfig) -> List[Tuple[str, AssetClass]]:
    available = panel.countries
    countries = config.countries or available
    unknown = sorted(set(countries) - set(available))
    if unknown:
        logger.warning(f"Countries not in the panel, skipped: {', '.join(unknown)}")
    cells = [
        (country, asset)
        for country in sorted(set(countries) & set(available))
        for asset in config.assets_for(country)
    ]
    return sorted(set(cells), key=lambda c: (c[0], ASSET_ORDER[c[1]]))


def _requested_assets(config: RunConfig, stages: Iterable[Stage]) -> List[AssetClass]:
    assets = set(config.assets)
    for extra in config.country_assets.values():
        assets.update(extra)
    if Stage.SIM in stages:
        assets.update(config.sim_assets)
    return sorted(assets, key=ASSET_ORDER.get)


def evaluate_cell(
    panel: ObservationPanel,
    config: RunConfig,
    country: str,
    asset: AssetClass,
    cache: Optional[SeriesCache] = None,
) -> Tuple[CellResult, Optional[DerivedSeries]]:
    """
    Run regression, forecast, out-of-sample, economic and growth stages of one cell.

    A failed stage is recorded and the stages that do not depend on it still run.
    """
    cache = cache or get_series_cache()
    runner = _StageRunner(country, asset)
    lags = config.fixed_lags

    series = runner.run(
        "derive", lambda: cache.get_series(panel, config.columns, country, asset)
    )
    if series is None:
        return CellResult(country=country, asset=asset, failures=runner.failures), None

    regression = runner.run("regression", lambda: predictive_regression(series, lags=lags))
    forecasts = runner.run("forecast", lambda: series_forecasts(series, config.min_train))

    r2 = cw = econ = None
    if forecasts is not None:
        r2 = runner.run("oos", lambda: oos_r2(forecasts))
        cw = runner.run("oos", lambda: clark_west(forecasts, config.cw_hac))
        econ = runner.run(
            "economic",
            lambda: evaluate_economic_value(
                forecasts, series, config.gamma, config.variance_window
            )[0],
        )

    growth = None
    if asset.has_payout_growth:
        growth = runner.run("growth", lambda: payout_growth_regression(series, lags))

    result = CellResult(
        country=country,
        asset=asset,
        regression=regression,
        forecasts=forecasts,
        oos_r2=r2,
        clark_west=cw,
        econ=econ,
        growth=growth,
        failures=runner.failures,
    )
    return result, series


def simulate_asset(
    series: List[DerivedSeries], config: RunConfig, asset: AssetClass
) -> SimOutcome:
    """Pool one asset class across countries, estimate the VAR and simulate the null"""
    rows = pooled_var_rows(series)
    params = estimate_var_params(rows, asset, demean=config.demean)
    n_countries = max(rows["country"].nunique(), 1)
    length = config.sim_length or int(round(len(rows) / n_countries))
    logger.info(
        f"{asset.value}: {len(rows)} pooled rows from {n_countries} countries, "
        f"sample length {length}"
    )
    return simulate_null(
        params,
        sample_length=length,
        n_reps=config.sim_reps,
        seed=config.require_seed(),
        shock_mode=config.shock_mode,
        workers=config.workers,
    )


def _run_simulations(
    panel: ObservationPanel,
    config: RunConfig,
    countries: List[str],
    cache: SeriesCache,
) -> Tuple[Dict[str, SimOutcome], List[CellFailure]]:
    outcomes: Dict[str, SimOutcome] = {}
    failures: List[CellFailure] = []
    for asset in config.sim_assets:
        pooled = []
        for country in countries:
            runner = _StageRunner(country, asset)
            series = runner.run(
                "derive", lambda: cache.get_series(panel, config.columns, country, asset)
            )
            if series is not None:
                pooled.append(series)
            failures.extend(runner.failures)

        runner = _StageRunner(POOLED, asset)
        outcome = runner.run("simulation", lambda: simulate_asset(pooled, config, asset))
        if outcome is not None:
            outcomes[asset.value] = outcome
        failures.extend(runner.failures)
    return outcomes, failures


def _write_tables(
    writer: TableWriter,
    config: RunConfig,
    cells: List[CellResult],
    summary_stats: pd.DataFrame,
) -> List[SummaryCell]:
    assets = [a for a in AssetClass if any(c.asset is a for c in cells)]
    for asset in assets:
        writer.write(f"table2_{asset.value}", regression_table(cells, asset))
    writer.write("table3", oos_table(cells))
    for asset in assets:
        writer.write(f"table4_{asset.value}", economic_table(cells, asset, config.verbose))
    for asset in assets:
        if asset.has_payout_growth:
            writer.write(
                f"table5_{asset.value}", growth_table(cells, asset, config.t_threshold)
            )

    summary = classify_summary(
        [c.inputs() for c in cells], config.t_threshold, config.oos_alpha
    )
    writer.write("table1", summary_grid(summary, assets, blank=config.blank))
    for asset, table in summary_stats_tables(summary_stats).items():
        writer.write(f"tableA1_{asset}", table)
    return summary


def _write_simulations(
    writer: TableWriter, config: RunConfig, outcomes: Dict[str, SimOutcome]
) -> None:
    writer.write("fig1_params", simulation_params_table(outcomes))
    for asset, outcome in outcomes.items():
        writer.write(
            f"fig1_hist_{asset}_b_r", histogram_table(outcome.b_r_samples, config.hist_bins)
        )
        writer.write(
            f"fig1_hist_{asset}_b_d", histogram_table(outcome.b_d_samples, config.hist_bins)
        )
        writer.write(f"fig1_draws_{asset}", draws_table(outcome))


def run_pipeline(config: RunConfig, stages: Optional[Iterable[Stage]] = None) -> RunResult:
    """
    Load the panel, evaluate every cell and write the report files.

    Per-cell failures are recorded and listed in the manifest; only
    configuration and data-loading errors abort the run.
    """
    stages = list(stages) if stages is not None else [Stage.TABLES, Stage.SIM]
    if Stage.SIM in stages:
        config.require_seed()
    if not config.data:
        raise ConfigurationError("No data files configured", column="data")

    cache = get_series_cache()
    cache.clear()

    panel = load_panel(
        config.data,
        config.columns,
        assets=_requested_assets(config, stages),
        release=config.release,
    )
    keys = _cells(panel, config)
    countries = sorted({country for country, _ in keys})
    logger.info(f"Evaluating {len(keys)} cells across {len(countries)} countries")

    writer = TableWriter(config.output_dir, config.formats)
    cells: List[CellResult] = []
    series: List[DerivedSeries] = []
    summary: List[SummaryCell] = []
    summary_stats = None
    failures: List[CellFailure] = []

    if Stage.TABLES in stages:
        with ThreadPoolExecutor(max_workers=config.workers) as executor:
            evaluated = list(
                executor.map(lambda k: evaluate_cell(panel, config, k[0], k[1], cache), keys)
            )
        for result, derived in evaluated:
            cells.append(result)
            failures.extend(result.failures)
            if derived is not None:
                series.append(derived)
        summary_stats = summary_table(series)
        summary = _write_tables(writer, config, cells, summary_stats)

    outcomes: Dict[str, SimOutcome] = {}
    if Stage.SIM in stages:
        outcomes, sim_failures = _run_simulations(panel, config, countries, cache)
        failures.extend(sim_failures)
        _write_simulations(writer, config, outcomes)

    if config.dump_derived and series:
        derived_path = dump_derived(series, config.output_dir / "derived.csv")
        writer.files.append(derived_path)

    if failures:
        logger.warning(f"{len(failures)} stage failures; see manifest.json")

    writer.write_manifest(
        {
            "config": config.echo(),
            "release": panel.release,
            "seed": config.seed,
            "nw_lag_rule": config.nw_lag_rule,
            "stages": [s.value for s in stages],
            "cache": cache.stats(),
            "failures": [f.model_dump(mode="json") for f in failures],
        }
    )
    return RunResult(
        output_dir=config.output_dir,
        cells=cells,
        summary=summary,
        summary_stats=summary_stats,
        simulations=outcomes,
        failures=failures,
        files=list(writer.files),
    )
