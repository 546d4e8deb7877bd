"""
Mapping of failures to CLI exit codes
"""
import logging
from enum import IntEnum
from typing import Callable

from pydantic import ValidationError

from predictkit.exceptions import ConfigurationError, DataError, PredictKitError

logger = logging.getLogger(__name__)


class ExitCode(IntEnum):
    """Process exit codes of the predictkit CLI"""
    SUCCESS = 0
    CONFIGURATION_ERROR = 1
    PARTIAL = 2


def exit_code_for(exc: BaseException) -> ExitCode:
    """Log an exception that aborted the run and pick its exit code"""
    if isinstance(exc, ConfigurationError):
        column = f" (column: {exc.column})" if exc.column else ""
        logger.error(f"Configuration error: {exc.detail}{column}")
    elif isinstance(exc, DataError):
        logger.error(f"Data error: {exc.detail}")
    elif isinstance(exc, ValidationError):
        logger.error(f"Validation error: {exc}")
    elif isinstance(exc, PredictKitError):
        logger.error(f"{type(exc).__name__}: {exc.detail}")
    else:
        logger.error(f"Unhandled exception: {type(exc).__name__}: {exc}", exc_info=True)
    return ExitCode.CONFIGURATION_ERROR


def run_with_exit_code(func: Callable[[], int]) -> int:
    """Run a CLI action, turning aborting exceptions into exit codes"""
    try:
        return int(func())
    except KeyboardInterrupt:
        logger.warning("Interrupted")
        return int(ExitCode.CONFIGURATION_ERROR)
    except Exception as e:
        return int(exit_code_for(e))
