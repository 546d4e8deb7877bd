"""
Delimited-file loading into an observation panel
"""
import logging
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Union

import numpy as np
import pandas as pd

from predictkit.exceptions import ConfigurationError, DataError
from predictkit.models import SINGLE_ASSETS, AssetClass, ColumnConfig, ObservationPanel
from predictkit.models.panel import PANEL_INDEX

logger = logging.getLogger(__name__)

MISSING_TOKENS = frozenset({"", "NA", "N/A", "NaN", "nan", "NULL", "null", "."})


def _read_table(path: Path) -> pd.DataFrame:
    """Read a comma- or tab-delimited file keeping every cell as text"""
    try:
        frame = pd.read_csv(
            path, sep=None, engine="python", dtype=str, keep_default_na=False
        )
    except FileNotFoundError:
        raise ConfigurationError(f"Data file not found: {path}")
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise DataError(f"Cannot parse delimited file: {e}", path=path)
    frame.columns = frame.columns.str.strip()
    return frame.apply(lambda col: col.str.strip())


def _parse_years(raw: pd.Series, path: Path) -> pd.Series:
    years = pd.to_numeric(raw, errors="coerce")
    bad = years.isna() | (years != years.round())
    if bad.any():
        position = int(bad.to_numpy().nonzero()[0][0])
        raise DataError(f"Invalid year {raw.iloc[position]!r}", path=path, row=position + 2)
    return years.astype(int)


def _file_records(path: Path, config: ColumnConfig, columns: List[str]) -> pd.Series:
    frame = _read_table(path)

    for key in (config.country_column, config.year_column):
        if key not in frame.columns:
            raise ConfigurationError(f"Key column '{key}' missing from {path}", column=key)
    missing = [c for c in columns if c not in frame.columns]
    if missing:
        raise ConfigurationError(
            f"Mapped column '{missing[0]}' missing from {path}", column=missing[0]
        )

    years = _parse_years(frame[config.year_column], path)
    countries = frame[config.country_column]
    keys = pd.DataFrame({"country": countries, "year": years})
    duplicated = keys.duplicated(keep="first")
    if duplicated.any():
        position = int(duplicated.to_numpy().nonzero()[0][0])
        raise DataError(
            f"Duplicate row for ({countries.iloc[position]}, {years.iloc[position]})",
            path=path,
            row=position + 2,
        )

    pieces = []
    for column in columns:
        raw = frame[column]
        present = ~raw.isin(MISSING_TOKENS)
        values = pd.to_numeric(raw.where(present), errors="coerce")
        bad = present & ~np.isfinite(values)
        if bad.any():
            position = int(bad.to_numpy().nonzero()[0][0])
            raise DataError(
                f"Non-numeric value {raw.iloc[position]!r} in column '{column}'",
                path=path,
                row=position + 2,
            )
        if column in config.percent_columns:
            values = values / 100.0
        piece = pd.DataFrame(
            {"country": countries, "variable": column, "year": years, "value": values}
        )[present]
        pieces.append(piece)

    if not pieces:
        return pd.Series(dtype=float, index=pd.MultiIndex.from_tuples([], names=PANEL_INDEX))
    long = pd.concat(pieces, ignore_index=True)
    return long.set_index(list(PANEL_INDEX))["value"].astype(float)


def load_panel(
    files: Union[Path, str, Sequence[Union[Path, str]]],
    config: ColumnConfig,
    assets: Optional[Iterable[AssetClass]] = None,
    release: str = "unknown",
) -> ObservationPanel:
    """
    Load one or more delimited files into an ObservationPanel.

    Only the columns the requested assets map to are read; every other
    column is ignored. Empty cells and missing tokens become absent keys.
    """
    if isinstance(files, (str, Path)):
        files = [files]
    paths = [Path(f) for f in files]
    if not paths:
        raise ConfigurationError("No data files given")

    assets = list(assets) if assets is not None else list(SINGLE_ASSETS)
    columns = config.required_columns(assets)

    parts = []
    for path in paths:
        records = _file_records(path, config, columns)
        logger.info(f"Loaded {len(records)} records from {path}")
        parts.append(records)

    records = pd.concat(parts) if len(parts) > 1 else parts[0]
    if records.index.has_duplicates:
        country, variable, year = records.index[records.index.duplicated()][0]
        raise DataError(
            f"({country}, {year}, {variable}) appears in more than one file",
            path=paths[-1],
        )

    records = records.sort_index()
    logger.debug(
        f"Panel has {len(records)} records across "
        f"{records.index.get_level_values('country').nunique()} countries"
    )
    return ObservationPanel(records=records, source_paths=paths, release=release)
