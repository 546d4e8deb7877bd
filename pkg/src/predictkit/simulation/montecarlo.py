"""
Monte Carlo of slope estimates under the no-return-predictability null
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

import numpy as np
from scipy.signal import lfilter

from predictkit.exceptions import SampleSizeError
from predictkit.models import NullParams, ShockMode, SimOutcome, VarParams

from .var import null_params

logger = logging.getLogger(__name__)

MIN_SAMPLE_LENGTH = 30
BLOCK_SIZE = 500
BURN_IN = 100

Draws = Tuple[np.ndarray, np.ndarray, np.ndarray]


def _shock_factor(cov: np.ndarray) -> np.ndarray:
    """Symmetric square root of a PSD covariance (eigenvalues clipped at zero)"""
    values, vectors = np.linalg.eigh(cov)
    return vectors * np.sqrt(np.clip(values, 0.0, None))


def _slopes(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Row-wise OLS slope of y on x with an intercept"""
    xc = x - x.mean(axis=1, keepdims=True)
    yc = y - y.mean(axis=1, keepdims=True)
    return (xc * yc).sum(axis=1) / (xc * xc).sum(axis=1)


def _draw_shocks(
    rng: np.random.Generator,
    reps: int,
    periods: int,
    params: VarParams,
    mode: ShockMode,
) -> np.ndarray:
    """(reps, periods, 2) array of (e_dp, e_d) shocks"""
    if mode is ShockMode.BOOTSTRAP:
        index = rng.integers(0, len(params.residuals), size=(reps, periods))
        return params.residuals[index]
    z = rng.standard_normal((reps, periods, 2))
    return z @ _shock_factor(params.shock_cov).T


def _simulate_block(
    seed: np.random.SeedSequence,
    reps: int,
    params: VarParams,
    null: NullParams,
    sample_length: int,
    mode: ShockMode,
    stationary: bool,
) -> Draws:
    rng = np.random.default_rng(seed)
    burn = 0 if stationary else BURN_IN
    shocks = _draw_shocks(rng, reps, burn + sample_length, params, mode)
    e_dp, e_d = shocks[..., 0], shocks[..., 1]

    a = [1.0, -null.phi]
    if stationary:
        var_dp = params.shock_cov[0, 0] / (1.0 - null.phi**2)
        sd0 = np.sqrt(var_dp) if var_dp > 0.0 else params.dp_sd
        x0 = sd0 * rng.standard_normal(reps)
    else:
        warm = lfilter([1.0], a, e_dp[:, :burn], axis=1)
        x0 = warm[:, -1]
        if not np.any(x0):
            # noiseless warm-up never leaves the mean
            x0 = params.dp_sd * rng.standard_normal(reps)
        e_dp, e_d = e_dp[:, burn:], e_d[:, burn:]

    # dp deviations from the mean: x_{t+1} = phi x_t + e_dp
    path = lfilter([1.0], a, e_dp, axis=1, zi=(null.phi * x0)[:, None])[0]
    x = np.concatenate([x0[:, None], path], axis=1)
    lagged, lead = x[:, :-1], x[:, 1:]

    dd = null.b_d * lagged + e_d
    # returns from the linearized identity r = dd - rho dp_{t+1} + dp_t
    r = dd - params.rho * lead + lagged

    return _slopes(lagged, lead), _slopes(lagged, dd), _slopes(lagged, r)


def simulate_null(
    params: VarParams,
    sample_length: int,
    n_reps: int = 10000,
    seed: int = 0,
    shock_mode: ShockMode = ShockMode.GAUSSIAN,
    workers: int = 1,
    null: Optional[NullParams] = None,
) -> SimOutcome:
    """
    Simulate the VAR under the null and collect (phi, b_d, b_r) estimates.

    Replications are split into fixed blocks, each with its own spawned
    seed, so the draws do not depend on the number of workers.
    """
    if sample_length < MIN_SAMPLE_LENGTH:
        raise SampleSizeError(f"Sample length {sample_length} below {MIN_SAMPLE_LENGTH}")
    null = null or null_params(params)

    flags: List[str] = []
    stationary = abs(null.phi) < 1.0
    if not stationary:
        logger.warning(
            f"phi0={null.phi:.4f} is not stationary, starting dp at its mean "
            f"with {BURN_IN} burn-in periods"
        )
        flags.append("stationary_fallback")

    sizes = [BLOCK_SIZE] * (n_reps // BLOCK_SIZE)
    if n_reps % BLOCK_SIZE:
        sizes.append(n_reps % BLOCK_SIZE)
    seeds = np.random.SeedSequence(seed).spawn(len(sizes))

    def run(block: int) -> Draws:
        return _simulate_block(
            seeds[block], sizes[block], params, null, sample_length, shock_mode, stationary
        )

    logger.info(
        f"Simulating {n_reps} replications of length {sample_length} "
        f"in {len(sizes)} blocks on {workers} workers"
    )
    with ThreadPoolExecutor(max_workers=workers) as executor:
        blocks = list(executor.map(run, range(len(sizes))))

    phi, b_d, b_r = (np.concatenate([b[i] for b in blocks]) for i in range(3))

    br_tail = b_r >= params.b_r
    bd_tail = b_d <= params.b_d
    outcome = SimOutcome(
        params=params,
        null=null,
        phi_samples=phi,
        b_d_samples=b_d,
        b_r_samples=b_r,
        p_br=float(br_tail.mean()),
        p_bd=float(bd_tail.mean()),
        p_phi=float((phi >= params.phi).mean()),
        p_joint=float((br_tail & bd_tail).mean()),
        seed=seed,
        n_reps=n_reps,
        sample_length=sample_length,
        shock_mode=shock_mode,
        flags=flags,
    )
    logger.info(
        f"Null simulation done: p(b_r)={outcome.p_br:.3f}, p(b_d)={outcome.p_bd:.3f}, "
        f"p(joint)={outcome.p_joint:.3f}"
    )
    return outcome


def histogram(samples: np.ndarray, bins: int = 50) -> Tuple[np.ndarray, np.ndarray]:
    """Bin edges and counts of a simulated slope sample"""
    counts, edges = np.histogram(np.asarray(samples, dtype=float), bins=bins)
    return edges, counts
