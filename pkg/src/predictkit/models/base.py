"""
Base models and common types for predictkit
"""
from enum import Enum
from typing import Optional

from pydantic import BaseModel


class AssetClass(str, Enum):
    """Asset classes covered by the evaluation"""
    BOND = "bond"
    EQUITY = "equity"
    HOUSING = "housing"
    RISKY = "risky"
    WEALTH = "wealth"

    @property
    def is_portfolio(self) -> bool:
        """Representative-agent portfolios are built from other assets"""
        return self in (AssetClass.RISKY, AssetClass.WEALTH)

    @property
    def payout_label(self) -> Optional[str]:
        """Short label of the asset's own payout-price ratio"""
        return PAYOUT_LABELS.get(self)

    @property
    def has_payout_growth(self) -> bool:
        """Coupons are fixed, so only equity and housing have payout growth"""
        return self in (AssetClass.EQUITY, AssetClass.HOUSING)


SINGLE_ASSETS = (AssetClass.BOND, AssetClass.EQUITY, AssetClass.HOUSING)

PAYOUT_LABELS = {
    AssetClass.BOND: "cp",
    AssetClass.EQUITY: "dp",
    AssetClass.HOUSING: "rp",
}

# Predictor order used for representative portfolios
ALL_PAYOUT_LABELS = ("cp", "dp", "rp")


class ResultModel(BaseModel):
    """Base model for immutable result objects holding numpy/pandas payloads"""

    model_config = {
        "arbitrary_types_allowed": True,
        "frozen": True,
    }
