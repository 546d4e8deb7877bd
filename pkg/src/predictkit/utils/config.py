"""
Configuration management using Pydantic settings
"""
import logging
import re
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

import yaml
from pydantic import BaseModel, Field, ValidationError, field_validator
from pydantic_settings import BaseSettings

from predictkit.exceptions import ConfigurationError
from predictkit.models import AssetClass, ColumnConfig, ShockMode

logger = logging.getLogger(__name__)

_FIXED_LAGS = re.compile(r"^fixed:(\d+)$")


class Settings(BaseSettings):
    """Process-level defaults loaded from environment variables"""

    log_level: str = Field("INFO", description="Log level")
    workers: int = Field(4, gt=0, description="Worker threads for per-cell fan-out")
    output_dir: Path = Field(Path("output"), description="Default report directory")
    seed: Optional[int] = Field(None, ge=0, description="Default simulation seed")
    sim_reps: int = Field(10000, gt=0, description="Default simulation repetitions")

    model_config = {
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "case_sensitive": False,
        "env_prefix": "PREDICTKIT_",
        "validate_default": True,
        "extra": "ignore"
    }

    def log_configuration(self):
        """Log current process defaults"""
        logger.info("Settings loaded:")
        logger.info(f"  Log Level: {self.log_level}")
        logger.info(f"  Workers: {self.workers}")
        logger.info(f"  Output Dir: {self.output_dir}")
        logger.info(f"  Seed: {self.seed if self.seed is not None else '✗ Not Set'}")
        logger.info(f"  Sim Reps: {self.sim_reps}")


class RunConfig(BaseModel):
    """Everything one evaluation run needs"""

    data: List[Path] = Field(default_factory=list, description="Delimited panel files")
    release: str = Field("unknown", description="Data-release label for the manifest")
    columns: ColumnConfig = Field(default_factory=ColumnConfig)
    countries: Optional[List[str]] = Field(None, description="None means every country")
    assets: List[AssetClass] = Field(default_factory=lambda: list(AssetClass))
    country_assets: Dict[str, List[AssetClass]] = Field(
        default_factory=dict, description="Per-country asset override"
    )

    gamma: float = Field(5.0, gt=0, description="Risk aversion")
    min_train: int = Field(20, gt=0, description="Observations before the first forecast")
    variance_window: int = Field(20, gt=1, description="Realized-variance window")
    nw_lag_rule: str = Field("plugin", description="plugin or fixed:<k>")
    cw_hac: Optional[int] = Field(None, ge=0, description="Newey-West lags for Clark-West")
    t_threshold: float = Field(1.645, gt=0, description="In-sample |t| threshold")
    oos_alpha: float = Field(0.05, gt=0, lt=1, description="Clark-West significance")

    sim_reps: int = Field(10000, gt=0)
    seed: Optional[int] = Field(None, ge=0)
    sim_length: Optional[int] = Field(None, ge=30, description="None uses the mean span")
    shock_mode: ShockMode = ShockMode.GAUSSIAN
    demean: bool = Field(False, description="Per-country demeaning of the pooled VAR")
    hist_bins: int = Field(50, gt=0)
    sim_assets: List[AssetClass] = Field(
        default_factory=lambda: [AssetClass.EQUITY, AssetClass.HOUSING]
    )

    output_dir: Path = Field(Path("output"))
    formats: List[Literal["csv", "markdown"]] = Field(default_factory=lambda: ["csv"])
    blank: bool = Field(False, description="Render non-Y summary cells empty")
    verbose: bool = False
    dump_derived: bool = Field(False, description="Write every derived series to disk")
    workers: int = Field(4, gt=0)

    @field_validator("nw_lag_rule")
    @classmethod
    def _check_lag_rule(cls, value: str) -> str:
        if value != "plugin" and not _FIXED_LAGS.match(value):
            raise ValueError("nw_lag_rule must be 'plugin' or 'fixed:<k>'")
        return value

    @field_validator("sim_assets")
    @classmethod
    def _check_sim_assets(cls, value: List[AssetClass]) -> List[AssetClass]:
        unsupported = [a.value for a in value if not a.has_payout_growth]
        if unsupported:
            raise ValueError(f"no payout-growth simulation for {unsupported}")
        return value

    @property
    def fixed_lags(self) -> Optional[int]:
        """Lag count when the rule is fixed, else None for the plug-in rule"""
        match = _FIXED_LAGS.match(self.nw_lag_rule)
        return int(match.group(1)) if match else None

    def assets_for(self, country: str) -> List[AssetClass]:
        return self.country_assets.get(country, self.assets)

    def require_seed(self) -> int:
        """Simulation runs need an explicit seed"""
        if self.seed is None:
            raise ConfigurationError("A seed is required for simulation runs", column="seed")
        return self.seed

    def echo(self) -> Dict[str, Any]:
        """JSON-friendly copy for the run manifest"""
        return self.model_dump(mode="json")

    def log_configuration(self):
        """Log the effective run configuration"""
        logger.info("Run configuration:")
        logger.info(f"  Data: {', '.join(str(p) for p in self.data) or '✗ Not Set'}")
        logger.info(f"  Release: {self.release}")
        logger.info(f"  Assets: {', '.join(a.value for a in self.assets)}")
        logger.info(f"  Countries: {', '.join(self.countries) if self.countries else 'all'}")
        logger.info(f"  Gamma: {self.gamma}")
        logger.info(f"  Min Train: {self.min_train}")
        logger.info(f"  Variance Window: {self.variance_window}")
        logger.info(f"  NW Lag Rule: {self.nw_lag_rule}")
        logger.info(f"  Sim Reps: {self.sim_reps} ({self.shock_mode.value} shocks)")
        logger.info(f"  Seed: {self.seed if self.seed is not None else '✗ Not Set'}")
        logger.info(f"  Output: {self.output_dir} ({', '.join(self.formats)})")


def load_run_config(
    path: Optional[Path] = None,
    overrides: Optional[Dict[str, Any]] = None,
    defaults: Optional[Settings] = None,
) -> RunConfig:
    """Build a RunConfig from settings, an optional YAML file and CLI overrides"""
    defaults = defaults or settings
    values: Dict[str, Any] = {
        "workers": defaults.workers,
        "output_dir": defaults.output_dir,
        "seed": defaults.seed,
        "sim_reps": defaults.sim_reps,
    }

    if path is not None:
        try:
            with open(path, "r", encoding="utf-8") as handle:
                loaded = yaml.safe_load(handle) or {}
        except OSError as e:
            raise ConfigurationError(f"Cannot read config {path}: {e}")
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Malformed config {path}: {e}")
        if not isinstance(loaded, dict):
            raise ConfigurationError(f"Config {path} must be a mapping")
        base = Path(path).parent
        if "data" in loaded:
            data = loaded["data"]
            data = [data] if isinstance(data, str) else data
            loaded["data"] = [p if Path(p).is_absolute() else base / p for p in data]
        values.update(loaded)

    values.update({k: v for k, v in (overrides or {}).items() if v is not None})

    try:
        return RunConfig(**values)
    except ValidationError as e:
        raise ConfigurationError(f"Invalid run configuration: {e}")


# Global settings instance
settings = Settings()
