"""
Panel loading and series derivation
"""
from .derive import derive_series, dump_derived
from .loader import load_panel
from .portfolios import build_representative_portfolio
from .summary import summary_table
from .transforms import (
    coupon_price_from_yield,
    log_excess_return,
    payout_growth,
    summarize_series,
    winsorize,
)

__all__ = [
    "derive_series",
    "dump_derived",
    "load_panel",
    "build_representative_portfolio",
    "summary_table",
    "coupon_price_from_yield",
    "log_excess_return",
    "payout_growth",
    "summarize_series",
    "winsorize",
]
