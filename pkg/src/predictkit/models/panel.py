"""
Observation panel and column-mapping configuration
"""
from pathlib import Path
from typing import Iterable, Iterator, List, Optional, Tuple

import pandas as pd
from pydantic import BaseModel, Field, field_validator, model_validator

from predictkit.exceptions import ConfigurationError

from .base import SINGLE_ASSETS, AssetClass, ResultModel

PANEL_INDEX = ("country", "variable", "year")


class AssetColumns(BaseModel):
    """Panel variable names for one asset class"""
    total_return: str = Field(..., description="Simple annual total return column")
    payout: Optional[str] = Field(
        None,
        description="Payout-price ratio column (coupon yield c_t/p_{t-1} for bonds)",
    )
    capitalization: Optional[str] = Field(
        None, description="Capitalization column used for portfolio weights"
    )


class ColumnConfig(BaseModel):
    """Mapping from panel variables to the series each asset needs"""
    country_column: str = Field("country", description="Country key column")
    year_column: str = Field("year", description="Calendar year key column")
    bond: AssetColumns = Field(
        default_factory=lambda: AssetColumns(total_return="bond_tr", payout="bond_rate")
    )
    equity: AssetColumns = Field(
        default_factory=lambda: AssetColumns(total_return="eq_tr", payout="eq_dp")
    )
    housing: AssetColumns = Field(
        default_factory=lambda: AssetColumns(
            total_return="housing_tr", payout="housing_rent_yd"
        )
    )
    bill_return: str = Field("bill_rate", description="Treasury-bill return column")
    bill_capitalization: Optional[str] = Field(
        None, description="Bill stock column for the wealth portfolio"
    )
    percent_columns: List[str] = Field(
        default_factory=list, description="Columns stored in percent, divided by 100"
    )
    winsorize: bool = Field(False, description="Clip derived series to quantiles")
    winsorize_limits: Tuple[float, float] = Field((0.01, 0.99))

    @field_validator("winsorize_limits")
    @classmethod
    def _check_limits(cls, value: Tuple[float, float]) -> Tuple[float, float]:
        lower, upper = value
        if not 0.0 <= lower < upper <= 1.0:
            raise ValueError("winsorize_limits must satisfy 0 <= lower < upper <= 1")
        return value

    def columns_for(self, asset: AssetClass) -> AssetColumns:
        """Column mapping of a single asset class"""
        if asset.is_portfolio:
            raise ConfigurationError(f"{asset.value} has no direct column mapping")
        return getattr(self, asset.value)

    def required_columns(self, assets: Iterable[AssetClass]) -> List[str]:
        """Every mapped panel column the given assets need, in stable order"""
        assets = list(assets)
        self.validate_for(assets)
        needed = {self.bill_return}
        for asset in assets:
            if asset.is_portfolio:
                # portfolios regress on every payout-price ratio, bonds included
                for single in SINGLE_ASSETS:
                    cols = self.columns_for(single)
                    needed.update(c for c in (cols.total_return, cols.payout) if c)
                for component in portfolio_components(asset):
                    needed.add(self.columns_for(component).capitalization)
                if asset is AssetClass.WEALTH:
                    needed.add(self.bill_capitalization)
            else:
                cols = self.columns_for(asset)
                needed.update(c for c in (cols.total_return, cols.payout) if c)
        return sorted(c for c in needed if c)

    def validate_for(self, assets: Iterable[AssetClass]) -> None:
        """Check the mapping covers the requested assets"""
        for asset in assets:
            if not self.bill_return:
                raise ConfigurationError("A bill return mapping is required")
            if not asset.is_portfolio:
                if not self.columns_for(asset).total_return:
                    raise ConfigurationError(
                        f"No return mapping for {asset.value}", column=asset.value
                    )
                continue
            for component in portfolio_components(asset):
                if not self.columns_for(component).capitalization:
                    raise ConfigurationError(
                        f"{asset.value} portfolio needs a capitalization column for "
                        f"{component.value}",
                        column=f"{component.value}.capitalization",
                    )
            if asset is AssetClass.WEALTH and not self.bill_capitalization:
                raise ConfigurationError(
                    "wealth portfolio needs a bill capitalization column",
                    column="bill_capitalization",
                )


def portfolio_components(asset: AssetClass) -> Tuple[AssetClass, ...]:
    if asset is AssetClass.RISKY:
        return (AssetClass.EQUITY, AssetClass.HOUSING)
    return (AssetClass.BOND, AssetClass.EQUITY, AssetClass.HOUSING)


class ObservationPanel(ResultModel):
    """Country x year x variable grid; missing observations are absent keys"""
    records: pd.Series = Field(
        ..., description="Values indexed by (country, variable, year)"
    )
    source_paths: List[Path] = Field(default_factory=list)
    release: str = Field("unknown", description="Data-release label")

    @model_validator(mode="after")
    def _check_records(self) -> "ObservationPanel":
        index = self.records.index
        if list(index.names) != list(PANEL_INDEX):
            raise ValueError(f"records must be indexed by {PANEL_INDEX}")
        if index.has_duplicates:
            raise ValueError("at most one value per (country, year, variable)")
        if self.records.isna().any():
            raise ValueError("missing observations must be absent, not NaN")
        return self

    def __len__(self) -> int:
        return len(self.records)

    @property
    def countries(self) -> List[str]:
        return sorted(self.records.index.get_level_values("country").unique())

    @property
    def variables(self) -> List[str]:
        return sorted(self.records.index.get_level_values("variable").unique())

    def has(self, country: str, variable: str) -> bool:
        return (country, variable) in self.records.index.droplevel("year")

    def series(self, country: str, variable: str) -> pd.Series:
        """Year-indexed series for one (country, variable); empty when absent"""
        try:
            values = self.records.xs((country, variable), level=("country", "variable"))
        except KeyError:
            return pd.Series(dtype=float, name=variable, index=pd.Index([], name="year"))
        return values.sort_index().astype(float).rename(variable)

    def iter_records(self) -> Iterator[Tuple[str, int, str, float]]:
        """Yield (country, year, variable, value) records"""
        for (country, variable, year), value in self.records.sort_index().items():
            yield country, int(year), variable, float(value)
