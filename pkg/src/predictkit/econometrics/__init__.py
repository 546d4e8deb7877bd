"""
Least squares and HAC inference
"""
from .ols import (
    add_constant,
    bartlett_weights,
    default_nw_lags,
    hac_meat,
    newey_west_cov,
    newey_west_t,
    ols,
    with_hac,
)
from .regressions import (
    lag_one_year,
    payout_growth_regression,
    predictive_regression,
    regress,
)

__all__ = [
    "add_constant",
    "bartlett_weights",
    "default_nw_lags",
    "hac_meat",
    "newey_west_cov",
    "newey_west_t",
    "ols",
    "with_hac",
    "lag_one_year",
    "payout_growth_regression",
    "predictive_regression",
    "regress",
]
