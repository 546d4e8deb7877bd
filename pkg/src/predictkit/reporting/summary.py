"""
Y/N classification of in-sample, out-of-sample and economic evidence
"""
import logging
from typing import Iterable, List

from predictkit.models import CellInputs, SummaryCell

logger = logging.getLogger(__name__)

DEFAULT_T_THRESHOLD = 1.645
DEFAULT_OOS_ALPHA = 0.05


def classify_summary(
    results: Iterable[CellInputs],
    t_threshold: float = DEFAULT_T_THRESHOLD,
    oos_alpha: float = DEFAULT_OOS_ALPHA,
) -> List[SummaryCell]:
    """
    Apply the summary rules to each cell.

    IS is Y when any predictor has |t| >= t_threshold, OOS when the
    out-of-sample R2 is positive with a Clark-West p below oos_alpha, and
    CER when the CER gain is positive. Missing inputs leave the flag unset.
    """
    cells = []
    for item in results:
        failed = []
        is_flag = oos_flag = cer_flag = None

        if item.t_stats:
            is_flag = any(abs(t) >= t_threshold for t in item.t_stats)
        else:
            failed.append("is")
        if item.oos_r2 is not None and item.cw_p is not None:
            oos_flag = item.oos_r2 > 0.0 and item.cw_p < oos_alpha
        else:
            failed.append("oos")
        if item.cer_gain is not None:
            cer_flag = item.cer_gain > 0.0
        else:
            failed.append("cer")

        if failed:
            logger.debug(f"{item.country}/{item.asset.value}: no input for {failed}")
        cells.append(
            SummaryCell(
                country=item.country,
                asset=item.asset,
                is_flag=is_flag,
                oos_flag=oos_flag,
                cer_flag=cer_flag,
                failed=failed,
            )
        )
    return cells
