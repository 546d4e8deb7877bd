"""
Exceptions raised by the ingest, estimation and reporting layers
"""
from pathlib import Path
from typing import Optional, Union


class PredictKitError(Exception):
    """Base class for every predictkit error"""

    default_detail = "predictkit error"

    def __init__(self, detail: Optional[str] = None):
        self.detail = detail or self.default_detail
        super().__init__(self.detail)


class ConfigurationError(PredictKitError):
    """Configuration is missing, malformed or inconsistent with the data"""

    default_detail = "Invalid configuration"

    def __init__(self, detail: Optional[str] = None, column: Optional[str] = None):
        super().__init__(detail)
        self.column = column


class DataError(PredictKitError):
    """Input data violates a panel invariant"""

    default_detail = "Invalid data"

    def __init__(
        self,
        detail: Optional[str] = None,
        path: Optional[Union[str, Path]] = None,
        row: Optional[int] = None,
    ):
        self.path = str(path) if path is not None else None
        self.row = row
        if detail and self.path is not None:
            locus = f"{self.path}:{row}" if row is not None else self.path
            detail = f"{detail} ({locus})"
        super().__init__(detail)


class DomainError(PredictKitError):
    """A value lies outside the domain of a transformation"""

    default_detail = "Value outside function domain"


class SampleSizeError(PredictKitError):
    """Too few observations for the requested estimate"""

    default_detail = "Insufficient observations"


class SingularityError(PredictKitError):
    """Design matrix is rank deficient"""

    default_detail = "Design matrix is singular"


class DegenerateError(PredictKitError):
    """Statistic is undefined for the given data (zero denominator)"""

    default_detail = "Degenerate statistic"


class UnsupportedAssetError(PredictKitError):
    """Operation is not defined for the requested asset class"""

    default_detail = "Unsupported asset class"
