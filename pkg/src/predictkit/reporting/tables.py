"""
Assembly of report tables from pipeline results
"""
import math
from typing import Dict, Iterable, List, Optional

import numpy as np
import pandas as pd

from predictkit.models import ALL_PAYOUT_LABELS, AssetClass, SimOutcome, SummaryCell
from predictkit.simulation import histogram

from .results import CellResult

FAILED_MARK = "*"


def _by_asset(cells: Iterable[CellResult], asset: AssetClass) -> List[CellResult]:
    return [c for c in cells if c.asset is asset]


def regression_table(cells: Iterable[CellResult], asset: AssetClass) -> pd.DataFrame:
    """In-sample predictive regressions of one asset class"""
    rows = []
    for cell in _by_asset(cells, asset):
        fit = cell.regression
        if fit is None:
            continue
        row = {
            "country": cell.country,
            "start": fit.span[0] if fit.span else None,
            "end": fit.span[1] if fit.span else None,
            "n_obs": fit.n_obs,
        }
        if asset.is_portfolio:
            for label, slope, t in zip(fit.predictors, fit.slopes, fit.hac_t):
                row[f"coeff_{label}"] = float(slope)
                row[f"nw_t_{label}"] = float(t)
        else:
            row["coeff"] = fit.slope
            row["nw_t"] = fit.t_stat
        row["r2"] = fit.r_squared
        row["nw_lags"] = fit.nw_lags
        rows.append(row)
    columns = ["country", "start", "end", "n_obs"]
    if asset.is_portfolio:
        for label in ALL_PAYOUT_LABELS:
            columns += [f"coeff_{label}", f"nw_t_{label}"]
    else:
        columns += ["coeff", "nw_t"]
    return pd.DataFrame(rows, columns=columns + ["r2", "nw_lags"])


def oos_table(cells: Iterable[CellResult]) -> pd.DataFrame:
    """Out-of-sample R2 and Clark-West p-values, one row per cell"""
    rows = []
    for cell in cells:
        if cell.oos_r2 is None and cell.clark_west is None:
            continue
        forecasts = cell.forecasts
        rows.append(
            {
                "country": cell.country,
                "asset": cell.asset.value,
                "start": forecasts.start_year if forecasts else None,
                "n_forecasts": len(forecasts) if forecasts else None,
                "oos_r2": cell.oos_r2,
                "cw_stat": cell.clark_west.statistic if cell.clark_west else None,
                "cw_p": cell.clark_west.p_value if cell.clark_west else None,
                "degraded_years": len(forecasts.degraded_years) if forecasts else 0,
            }
        )
    return pd.DataFrame(
        rows,
        columns=["country", "asset", "start", "n_forecasts", "oos_r2", "cw_stat", "cw_p",
                 "degraded_years"],
    )


def economic_table(
    cells: Iterable[CellResult], asset: AssetClass, verbose: bool = False
) -> pd.DataFrame:
    """Sharpe ratios, CER gain and relative turnover of one asset class"""
    rows = []
    for cell in _by_asset(cells, asset):
        econ = cell.econ
        if econ is None:
            continue
        row = {
            "country": cell.country,
            "null_sr": econ.null_sharpe,
            "alt_sr": econ.alt_sharpe,
            "cer_gain": econ.cer_gain,
            "cer_z": econ.cer_z,
            "turnover": econ.relative_turnover,
        }
        if verbose:
            row.update(
                null_cer=econ.null_cer,
                alt_cer=econ.alt_cer,
                turnover_null_over_alt=econ.relative_turnover_inverse,
                n_years=econ.n_years,
            )
        row["flags"] = ";".join(econ.flags)
        rows.append(row)
    columns = ["country", "null_sr", "alt_sr", "cer_gain", "cer_z", "turnover"]
    if verbose:
        columns += ["null_cer", "alt_cer", "turnover_null_over_alt", "n_years"]
    return pd.DataFrame(rows, columns=columns + ["flags"])


def growth_table(
    cells: Iterable[CellResult], asset: AssetClass, t_threshold: float = 1.645
) -> pd.DataFrame:
    """Payout-growth regressions of one asset class"""
    rows = []
    for cell in _by_asset(cells, asset):
        fit = cell.growth
        if fit is None:
            continue
        rows.append(
            {
                "country": cell.country,
                "start": fit.span[0] if fit.span else None,
                "end": fit.span[1] if fit.span else None,
                "n_obs": fit.n_obs,
                "coeff": fit.slope,
                "nw_t": fit.t_stat,
                "r2": fit.r_squared,
                "nw_lags": fit.nw_lags,
                "significant": abs(fit.t_stat) >= t_threshold,
            }
        )
    return pd.DataFrame(
        rows,
        columns=["country", "start", "end", "n_obs", "coeff", "nw_t", "r2", "nw_lags",
                 "significant"],
    )


def _mark(flag: Optional[bool], blank: bool) -> str:
    if flag is None:
        return FAILED_MARK
    if flag:
        return "Y"
    return "" if blank else "N"


def summary_grid(
    cells: Iterable[SummaryCell], assets: Iterable[AssetClass], blank: bool = False
) -> pd.DataFrame:
    """
    Country rows by (asset, IS/OOS/CER/consistent) columns with a Y-count footer.

    Cells without an input are marked with ``*``.
    """
    assets = list(assets)
    cells = list(cells)
    countries = sorted({c.country for c in cells})
    lookup = {(c.country, c.asset): c for c in cells}

    rows = []
    counts: Dict[str, int] = {}
    for country in countries:
        row: Dict[str, str] = {"country": country}
        for asset in assets:
            cell = lookup.get((country, asset))
            flags = {
                "is": cell.is_flag if cell else None,
                "oos": cell.oos_flag if cell else None,
                "cer": cell.cer_flag if cell else None,
                "consistent": cell.consistent if cell else None,
            }
            for name, flag in flags.items():
                column = f"{asset.value}_{name}"
                row[column] = _mark(flag, blank)
                counts[column] = counts.get(column, 0) + int(bool(flag))
        rows.append(row)

    columns = ["country"] + [
        f"{a.value}_{n}" for a in assets for n in ("is", "oos", "cer", "consistent")
    ]
    footer = {"country": "Total Y", **{k: str(v) for k, v in counts.items()}}
    return pd.DataFrame(rows + [footer], columns=columns)


def summary_stats_tables(stats: pd.DataFrame) -> Dict[str, pd.DataFrame]:
    """Split the descriptive-statistics frame into one table per asset"""
    tables = {}
    for asset in AssetClass:
        part = stats[stats["asset"] == asset.value].drop(columns="asset")
        if not part.empty:
            tables[asset.value] = part.reset_index(drop=True)
    return tables


def simulation_params_table(outcomes: Dict[str, SimOutcome]) -> pd.DataFrame:
    """Estimated VAR, null parameters and tail probabilities per asset"""
    rows = []
    for asset, outcome in outcomes.items():
        params, null = outcome.params, outcome.null
        rows.append(
            {
                "asset": asset,
                "rho": params.rho,
                "phi": params.phi,
                "b_d": params.b_d,
                "b_r": params.b_r,
                "phi_0": null.phi,
                "b_d_0": null.b_d,
                "b_r_0": null.b_r,
                "identity_residual": params.identity_residual,
                "n_obs": params.n_obs,
                "sample_length": outcome.sample_length,
                "n_reps": outcome.n_reps,
                "seed": outcome.seed,
                "shock_mode": outcome.shock_mode.value,
                "p_br": outcome.p_br,
                "p_bd": outcome.p_bd,
                "p_phi": outcome.p_phi,
                "p_joint": outcome.p_joint,
                "flags": ";".join(outcome.flags),
            }
        )
    return pd.DataFrame(rows)


def histogram_table(samples: np.ndarray, bins: int) -> pd.DataFrame:
    """Bin edges and counts for external plotting"""
    edges, counts = histogram(samples, bins)
    return pd.DataFrame({"bin_left": edges[:-1], "bin_right": edges[1:], "count": counts})


def draws_table(outcome: SimOutcome) -> pd.DataFrame:
    """Per-replication slope estimates"""
    return pd.DataFrame(
        {
            "phi": outcome.phi_samples,
            "b_d": outcome.b_d_samples,
            "b_r": outcome.b_r_samples,
        }
    )


def format_inf(frame: pd.DataFrame) -> pd.DataFrame:
    """Replace infinities with the Inf token"""
    def token(value):
        if isinstance(value, float) and math.isinf(value):
            return "Inf" if value > 0 else "-Inf"
        return value

    return frame.apply(lambda column: column.map(token)) if not frame.empty else frame
