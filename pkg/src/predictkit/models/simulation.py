"""
VAR estimation and null-simulation models
"""
from enum import Enum
from typing import List, Optional

import numpy as np
from pydantic import Field, field_validator

from .base import AssetClass, ResultModel


class ShockMode(str, Enum):
    """How simulated (dp, payout-growth) shocks are drawn"""
    GAUSSIAN = "gaussian"
    BOOTSTRAP = "bootstrap"


class VarParams(ResultModel):
    """Pooled first-order VAR of (dp, payout growth, return) on lagged dp"""
    asset: Optional[AssetClass] = None
    rho: float = Field(..., gt=0.0, lt=1.0, description="Linearization constant")
    phi: float = Field(..., description="dp persistence")
    b_d: float = Field(..., description="Payout-growth slope")
    b_r: float = Field(..., description="Return slope")
    shock_cov: np.ndarray = Field(..., description="Covariance of (e_dp, e_d)")
    n_obs: int = Field(..., gt=0)
    dp_mean: float
    dp_sd: float = Field(..., ge=0.0)
    residuals: np.ndarray = Field(..., description="(n_obs, 2) residual pairs")
    demeaned: bool = False

    @field_validator("shock_cov")
    @classmethod
    def _check_cov(cls, value: np.ndarray) -> np.ndarray:
        value = np.asarray(value, dtype=float)
        if value.shape != (2, 2):
            raise ValueError("shock_cov must be 2x2")
        if not np.allclose(value, value.T):
            raise ValueError("shock_cov must be symmetric")
        scale = max(1.0, float(np.abs(value).max()))
        if np.linalg.eigvalsh(value).min() < -1e-12 * scale:
            raise ValueError("shock_cov must be positive semi-definite")
        return value

    @property
    def identity_residual(self) -> float:
        """b_r - b_d - (1 - rho*phi); zero when the linear identity holds exactly"""
        return self.b_r - self.b_d - (1.0 - self.rho * self.phi)


class NullParams(ResultModel):
    """Parameters of the no-return-predictability null"""
    phi: float
    b_d: float
    b_r: float = 0.0


class SimOutcome(ResultModel):
    """Simulated slope distributions under the null and their tail probabilities"""
    params: VarParams
    null: NullParams
    phi_samples: np.ndarray
    b_d_samples: np.ndarray
    b_r_samples: np.ndarray
    p_br: float = Field(..., ge=0.0, le=1.0, description="P(b_r,sim >= b_r,obs)")
    p_bd: float = Field(..., ge=0.0, le=1.0, description="P(b_d,sim <= b_d,obs)")
    p_phi: float = Field(..., ge=0.0, le=1.0, description="P(phi_sim >= phi_obs)")
    p_joint: float = Field(..., ge=0.0, le=1.0)
    seed: int
    n_reps: int = Field(..., gt=0)
    sample_length: int
    shock_mode: ShockMode = ShockMode.GAUSSIAN
    flags: List[str] = Field(default_factory=list)

    def identity_residuals(self) -> np.ndarray:
        """Per-replication b_r - b_d - (1 - rho*phi)"""
        rho = self.params.rho
        return self.b_r_samples - self.b_d_samples - (1.0 - rho * self.phi_samples)
