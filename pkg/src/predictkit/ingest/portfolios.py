"""
Capitalization-weighted representative-agent portfolios
"""
import logging
from typing import Tuple

import numpy as np
import pandas as pd

from predictkit.exceptions import ConfigurationError, DataError
from predictkit.models import AssetClass

from .transforms import log_excess_return

logger = logging.getLogger(__name__)


def build_representative_portfolio(
    kind: AssetClass,
    returns: pd.DataFrame,
    capitalizations: pd.DataFrame,
    bill_return: pd.Series,
) -> Tuple[pd.Series, pd.Series]:
    """
    Value-weighted portfolio of the component returns.

    ``returns`` and ``capitalizations`` are year-indexed frames with one
    column per component. Years where any component return, cap or the
    bill return is absent are dropped. Returns the simple portfolio return
    and its log excess return over bills.
    """
    if not kind.is_portfolio:
        raise ConfigurationError(f"{kind.value} is not a representative portfolio")
    if list(returns.columns) != list(capitalizations.columns):
        raise ConfigurationError("Component returns and capitalizations must match")

    parts = {
        "ret": returns,
        "cap": capitalizations,
        "bill": bill_return.to_frame("bill"),
    }
    frame = pd.concat(parts, axis=1).sort_index().dropna()
    if frame.empty:
        empty = pd.Series(dtype=float, index=pd.Index([], name="year"))
        return empty, empty.copy()

    cap_values = frame["cap"].to_numpy(dtype=float)
    if np.any(cap_values < 0.0):
        year = frame.index[(cap_values < 0.0).any(axis=1)][0]
        raise DataError(f"Negative capitalization in {kind.value} portfolio for {year}")
    totals = cap_values.sum(axis=1)
    if np.any(totals <= 0.0):
        year = frame.index[totals <= 0.0][0]
        raise DataError(f"Capitalizations sum to zero in {kind.value} portfolio for {year}")

    weights = cap_values / totals[:, None]
    simple = pd.Series(
        (weights * frame["ret"].to_numpy(dtype=float)).sum(axis=1),
        index=frame.index,
        name=kind.value,
    )
    excess = log_excess_return(simple, frame["bill"]["bill"])
    logger.debug(f"Built {kind.value} portfolio over {len(simple)} years")
    return simple, excess.rename(kind.value)
