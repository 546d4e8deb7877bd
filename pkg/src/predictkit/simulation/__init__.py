"""
Pooled VAR and null-hypothesis simulation
"""
from .montecarlo import BLOCK_SIZE, histogram, simulate_null
from .var import estimate_var_params, linearization_rho, null_params, pooled_var_rows

__all__ = [
    "BLOCK_SIZE",
    "histogram",
    "simulate_null",
    "estimate_var_params",
    "linearization_rho",
    "null_params",
    "pooled_var_rows",
]
