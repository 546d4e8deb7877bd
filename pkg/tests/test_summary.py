import pytest
from published_tables import CER_GAIN, COUNTRIES, GROWTH_T, IN_SAMPLE_T, OUT_OF_SAMPLE

from predictkit.models import AssetClass, CellInputs, SummaryCell
from predictkit.reporting import classify_summary, summary_grid

ASSETS = [AssetClass(a) for a in ("bond", "equity", "housing", "risky", "wealth")]

EXPECTED_IS = {
    "bond": {"Japan", "Portugal"},
    "equity": {"Australia", "Belgium", "France", "Portugal", "UK"},
    "housing": {
        "Denmark", "Finland", "France", "Germany", "Japan", "Netherlands", "Portugal", "UK",
    },
    "risky": set(COUNTRIES) - {"Australia", "Belgium", "Japan"},
    "wealth": set(COUNTRIES) - {"Australia", "Belgium", "Japan", "Sweden"},
}

EXPECTED_OOS = {
    "bond": set(),
    "equity": {"UK"},
    "housing": {"France", "Germany"},
    "risky": {"France"},
    "wealth": {"France"},
}

EXPECTED_CER = {
    "bond": {"Japan", "Spain", "USA"},
    "equity": {"Australia", "France", "Netherlands", "Spain"},
    "housing": {"Finland", "Germany", "Italy", "Japan", "Netherlands", "Switzerland"},
    "risky": {"Finland", "Germany", "Italy", "Spain"},
    "wealth": {"Finland", "Germany", "Italy"},
}


def _published_inputs():
    for asset in ASSETS:
        for country in COUNTRIES:
            r2, p = OUT_OF_SAMPLE[asset.value][country]
            yield CellInputs(
                country=country,
                asset=asset,
                t_stats=IN_SAMPLE_T[asset.value][country],
                oos_r2=r2,
                cw_p=p,
                cer_gain=CER_GAIN[asset.value][country],
            )


@pytest.fixture(scope="module")
def published_cells():
    return classify_summary(_published_inputs())


def _marked(cells, asset, attr):
    return {c.country for c in cells if c.asset is asset and getattr(c, attr)}


@pytest.mark.parametrize("asset", ASSETS, ids=lambda a: a.value)
def test_published_statistics_reproduce_the_summary(published_cells, asset):
    assert _marked(published_cells, asset, "is_flag") == EXPECTED_IS[asset.value]
    assert _marked(published_cells, asset, "oos_flag") == EXPECTED_OOS[asset.value]
    assert _marked(published_cells, asset, "cer_flag") == EXPECTED_CER[asset.value]


def test_every_published_cell_is_classified(published_cells):
    assert len(published_cells) == 80
    assert all(c.failed == [] for c in published_cells)
    assert all(c.is_flag is not None for c in published_cells)


def test_consistent_cells(published_cells):
    consistent = {(c.country, c.asset.value) for c in published_cells if c.consistent}
    assert consistent == {
        ("UK", "equity"),
        ("France", "housing"),
        ("Germany", "housing"),
        ("France", "risky"),
        ("France", "wealth"),
    }


@pytest.mark.parametrize(
    "inputs,flags",
    [
        # just above and below the in-sample threshold
        (dict(t_stats=[1.673]), (True, None, None)),
        (dict(t_stats=[1.373]), (False, None, None)),
        (dict(t_stats=[-0.2, 0.1, -1.7]), (True, None, None)),
        # positive R2 with an insignificant Clark-West test
        (dict(oos_r2=0.009, cw_p=0.159), (None, False, None)),
        (dict(oos_r2=-0.065, cw_p=0.019), (None, False, None)),
        (dict(oos_r2=0.042, cw_p=0.030), (None, True, None)),
        (dict(cer_gain=0.61), (None, None, True)),
        (dict(cer_gain=0.0), (None, None, False)),
    ],
)
def test_rules(inputs, flags):
    (cell,) = classify_summary([CellInputs(country="X", asset=AssetClass.EQUITY, **inputs)])
    assert (cell.is_flag, cell.oos_flag, cell.cer_flag) == flags


def test_missing_inputs_are_recorded():
    (cell,) = classify_summary([CellInputs(country="X", asset=AssetClass.BOND, cer_gain=1.0)])
    assert cell.failed == ["is", "oos"]
    assert not cell.consistent


def test_threshold_is_configurable():
    inputs = [CellInputs(country="X", asset=AssetClass.BOND, t_stats=[1.8])]
    assert classify_summary(inputs)[0].is_flag
    assert not classify_summary(inputs, t_threshold=1.96)[0].is_flag


@pytest.mark.parametrize(
    "asset,expected",
    [("equity", 14), ("housing", 5)],
)
def test_published_payout_growth_significance(asset, expected):
    assert sum(abs(t) >= 1.645 for t in GROWTH_T[asset].values()) == expected


def _grid_cells():
    return [
        SummaryCell(
            country="Beta", asset=AssetClass.BOND, is_flag=True, oos_flag=True, cer_flag=False
        ),
        SummaryCell(
            country="Alpha",
            asset=AssetClass.BOND,
            is_flag=False,
            oos_flag=None,
            cer_flag=True,
            failed=["oos"],
        ),
    ]


def test_summary_grid_layout():
    grid = summary_grid(_grid_cells(), [AssetClass.BOND, AssetClass.EQUITY])
    assert list(grid.columns[:5]) == [
        "country", "bond_is", "bond_oos", "bond_cer", "bond_consistent",
    ]
    assert list(grid["country"]) == ["Alpha", "Beta", "Total Y"]
    alpha, beta, footer = (grid.iloc[i] for i in range(3))
    assert (alpha["bond_is"], alpha["bond_oos"], alpha["bond_cer"]) == ("N", "*", "Y")
    assert beta["bond_consistent"] == "Y"
    # cells never computed are marked as failed
    assert alpha["equity_is"] == "*"
    assert footer["bond_is"] == "1"
    assert footer["bond_cer"] == "1"
    assert footer["equity_is"] == "0"


def test_summary_grid_blank_mode():
    grid = summary_grid(_grid_cells(), [AssetClass.BOND], blank=True)
    alpha = grid.iloc[0]
    assert alpha["bond_is"] == ""
    assert alpha["bond_oos"] == "*"
    assert grid.iloc[1]["bond_cer"] == ""
