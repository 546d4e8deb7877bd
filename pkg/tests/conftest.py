"""
Shared fixtures: synthetic panels written to temporary CSV files
"""
import pytest
from helpers import column_config, make_panel_frame

from predictkit.ingest import load_panel
from predictkit.models import AssetClass
from predictkit.reporting import get_series_cache
from predictkit.utils.config import RunConfig


@pytest.fixture
def columns():
    return column_config()


@pytest.fixture
def panel_frame():
    return make_panel_frame()


@pytest.fixture
def panel_csv(tmp_path, panel_frame):
    path = tmp_path / "panel.csv"
    panel_frame.to_csv(path, index=False)
    return path


@pytest.fixture
def panel(panel_csv, columns):
    return load_panel(panel_csv, columns, assets=list(AssetClass), release="synthetic")


@pytest.fixture
def run_config(tmp_path, panel_csv, columns):
    return RunConfig(
        data=[panel_csv],
        release="synthetic",
        columns=columns,
        sim_reps=200,
        seed=7,
        workers=2,
        output_dir=tmp_path / "out",
    )


@pytest.fixture(autouse=True)
def clear_series_cache():
    get_series_cache().clear()
    yield
    get_series_cache().clear()
