import csv
import json
import math
from decimal import Decimal

import pytest

from mie_ring.app.cli import EXIT_SUCCESS, EXIT_USAGE, EXIT_VERIFICATION_FAILURE, buildParser, main
from mie_ring.app.config import COMMAND, OUTPUT_FORMAT, RunConfig, _processEtaInput, _processRangeInput, _processVariantInput
from mie_ring.app.datahandler import ENERGY_FORMAT, DataManager, formatValue, shiftedEnergy
from mie_ring.app.figures import DEFAULT_FIGURE_DIRECTORY, SWEEPS, energyCell, fisherCell, potentialSurface, runFigures, saveFigures, surfaceGrid
from mie_ring.app.pool import mapCells
from mie_ring.app.records import DENSITY_ANGLES, DENSITY_RADII, runDensity, runFisher, runSpectrum
from mie_ring.app.tables import TABLE_ID, runTables
from mie_ring.app.verify import runVerify
from mie_ring.quantum.error import MieRingConfigError
from mie_ring.quantum.model import VARIANT
from mie_ring.quantum.spectrum import QuantumNumbers

SCH_DE = 2.25


@pytest.mark.parametrize(
    "text,expected",
    [(3, (3, 3)), ("3", (3, 3)), ("0..5", (0, 5)), (" 1 .. 2 ", (1, 2))],
)
def test_range_input(text, expected):
    assert _processRangeInput(text) == expected


@pytest.mark.parametrize("text", ["", "a", "3..1", "-1..2", "1..2..3", "1-2"])
def test_malformed_range_input(text):
    with pytest.raises(MieRingConfigError):
        _processRangeInput(text)


def test_negative_m_is_folded():
    config = RunConfig(COMMAND.SPECTRUM, nRange=(0, 0), nTildeRange=(0, 0), mRange=_processRangeInput("-2..2", True))
    assert [qn.m for qn in config.quantumNumbers()] == [2, 1, 0]


def test_eta_and_variant_input():
    assert _processEtaInput("0, 10") == (0.0, 10.0)
    with pytest.raises(MieRingConfigError):
        _processEtaInput("-1")
    with pytest.raises(MieRingConfigError):
        _processEtaInput(",")
    assert _processVariantInput("both") == (VARIANT.KRATZER_FUES, VARIANT.MODIFIED_KRATZER)
    assert _processVariantInput("modified") == (VARIANT.MODIFIED_KRATZER,)
    with pytest.raises(MieRingConfigError):
        _processVariantInput("custom")


@pytest.mark.parametrize(
    "arguments",
    [
        dict(De=1.0),
        dict(De=1.0, re=1.0, mu=-1.0),
        dict(De=1.0, re=1.0, mu=1.0, molecule="ScH"),
        dict(nRange=(2, 1)),
        dict(etas=()),
        dict(states=0),
        dict(jobs=0),
    ],
)
def test_invalid_configurations(arguments):
    with pytest.raises(MieRingConfigError):
        RunConfig(COMMAND.SPECTRUM, **arguments)


def test_subsample_keeps_ends():
    items = list(range(10))
    assert RunConfig(COMMAND.VERIFY).subsample(items) == items
    assert RunConfig(COMMAND.VERIFY, states=3).subsample(items) == [0, 4, 9]
    assert RunConfig(COMMAND.VERIFY, states=1).subsample(items) == [0]
    assert RunConfig(COMMAND.VERIFY, states=20).subsample(items) == items


def test_format_value():
    assert formatValue(None) == ""
    assert formatValue(True) == "true"
    assert formatValue(1.0 / 3.0) == "0.333333333333"
    assert formatValue(7) == "7"


def test_data_manager_files(tmp_path):
    manager = DataManager(["name", "value", "note"])
    manager.addRecord({"name": "a", "value": 2.0 / 3.0})
    manager.addRecord({"name": "b", "value": math.inf, "note": "x"})
    with pytest.raises(KeyError):
        manager.addRecord({"other": 1})
    assert len(manager) == 2

    csvPath = tmp_path / "sub" / "records.csv"
    manager.saveDataAsText(str(csvPath))
    with open(csvPath, newline="") as file:
        rows = list(csv.reader(file))
    assert rows == [["name", "value", "note"], ["a", "0.666666666667", ""], ["b", "inf", "x"]]

    jsonPath = tmp_path / "records.json"
    manager.saveDataAsText(str(jsonPath), "json")
    records = json.loads(jsonPath.read_text())
    assert records[0] == {"name": "a", "value": 0.666666666667, "note": None}
    assert records[1]["value"] is None


def test_data_manager_stdout(capsys):
    manager = DataManager(["value"])
    manager.addRecord({"value": 1.5})
    manager.saveDataAsText(None)
    assert capsys.readouterr().out == "value\n1.5\n"


def test_map_cells_keeps_order():
    cells = [-3, 1, -2, 5]
    assert mapCells(abs, cells) == [3, 1, 2, 5]
    assert mapCells(abs, cells, jobs=2) == [3, 1, 2, 5]


def test_spectrum_records_are_shifted_by_dissociation_energy():
    config = RunConfig(COMMAND.SPECTRUM, molecule="ScH", nRange=(0, 1), nTildeRange=(0, 1), mRange=(0, 0), etas=(0.0, 10.0))
    rows = runSpectrum(config).rows
    assert len(rows) == 2 * 2 * 4
    kratzerFues = [row for row in rows if row["variant"] == VARIANT.KRATZER_FUES.toString()]
    modified = [row for row in rows if row["variant"] == VARIANT.MODIFIED_KRATZER.toString()]
    for first, second in zip(kratzerFues, modified):
        assert (first["n"], first["ntilde"], first["eta"]) == (second["n"], second["ntilde"], second["eta"])
        assert second["energy"] - first["energy"] == pytest.approx(SCH_DE, rel=1e-12)
        assert first["energy"] < 0.0


def test_data_manager_column_formats():
    manager = DataManager(["energy", "gamma"], {"energy": ENERGY_FORMAT})
    manager.addRecord({"energy": -2.0 / 3.0, "gamma": 2.0 / 3.0})
    assert manager.toCsv() == "energy,gamma\n-0.666666666667,0.666666666667\n"
    assert json.loads(manager.toJson())[0]["energy"] == -0.666666666667
    assert shiftedEnergy(2.0 / 3.0, 2.25) == pytest.approx(1.583333333333, abs=1e-15)


def test_written_spectrum_is_shifted_by_dissociation_energy(tmp_path):
    config = RunConfig(COMMAND.SPECTRUM, molecule="ScH", nRange=(0, 3), nTildeRange=(0, 2), mRange=(0, 2), etas=(0.0, 1.0, 10.0))
    path = tmp_path / "spectrum.csv"
    runSpectrum(config).saveDataAsText(str(path))
    with open(path, newline="") as file:
        rows = list(csv.DictReader(file))
    kratzerFues = {
        (row["n"], row["ntilde"], row["m"], row["eta"]): Decimal(row["energy"])
        for row in rows
        if row["variant"] == VARIANT.KRATZER_FUES.toString()
    }
    modified = [row for row in rows if row["variant"] == VARIANT.MODIFIED_KRATZER.toString()]
    assert len(modified) == len(kratzerFues) == 4 * 3 * 3 * 3
    for row in modified:
        key = (row["n"], row["ntilde"], row["m"], row["eta"])
        assert Decimal(row["energy"]) - kratzerFues[key] == Decimal("2.25")


def test_custom_molecule_spectrum():
    config = RunConfig(COMMAND.SPECTRUM, De=15.0, re=0.8, mu=1.0, nRange=(0, 0), nTildeRange=(0, 0), mRange=(0, 0))
    rows = runSpectrum(config).rows
    assert [row["molecule"] for row in rows] == ["custom", "custom"]


def test_fisher_records_note_singular_closed_form():
    config = RunConfig(
        COMMAND.FISHER,
        molecule="ScH",
        nRange=(0, 1),
        nTildeRange=(1, 1),
        mRange=(0, 0),
        etas=(0.0, 1.0),
        variants=(VARIANT.KRATZER_FUES,),
    )
    rows = runFisher(config).rows
    assert len(rows) == 4
    singular = [row for row in rows if row["eta"] == 0.0]
    assert all(row["total_closed"] is None and "singular" in row["note"] for row in singular)
    regular = [row for row in rows if row["eta"] == 1.0]
    assert all(row["total_quadrature"] > 0.0 for row in regular)
    ground = next(row for row in regular if row["n"] == 0)
    assert ground["i_r_closed"] == pytest.approx(ground["i_r_quadrature"], rel=1e-6)
    assert ground["note"] is None
    assert "n > 0" in next(row for row in regular if row["n"] == 1)["note"]


def test_density_records():
    config = RunConfig(COMMAND.DENSITY, molecule="ScH", nRange=(0, 0), nTildeRange=(1, 1), mRange=(1, 1), etas=(1.0,), variants=(VARIANT.KRATZER_FUES,))
    rows = runDensity(config).rows
    assert len(rows) == DENSITY_RADII * DENSITY_ANGLES
    assert all(row["rho"] >= 0.0 for row in rows)
    assert all(row["phi"] == 0.0 for row in rows)


def test_tables_pass_on_subsample():
    artifacts = runTables(RunConfig(COMMAND.TABLES, states=3))
    assert [artifact.tableId for artifact in artifacts] == list(TABLE_ID)
    hydrides, compounds, fisher = artifacts
    assert len(hydrides.rows) == 3 * 2
    assert hydrides.passed and compounds.passed
    assert all(row["status"] == "informational" for row in fisher.rows)
    assert fisher.passed


def test_tables_for_one_molecule():
    hydrides, compounds, fisher = runTables(RunConfig(COMMAND.TABLES, molecule="ScN"))
    assert len(hydrides.rows) == 0
    assert len(compounds.rows) == 6 * 2
    assert compounds.passed
    assert {row["molecule"] for row in fisher.rows} <= {"ScN"}


def test_verify_passes_on_subsample():
    report = runVerify(RunConfig(COMMAND.VERIFY, states=2))
    assert report.passed, report.failures
    assert "normalization" in report.categories()
    assert "angular-solver" in report.categories()
    assert "angular-substitution" in report.categories()
    report.raiseForFailures()


def test_verify_detects_wrong_normalization():
    report = runVerify(RunConfig(COMMAND.VERIFY, states=2), normalizationFactor=2.0)
    assert not report.passed
    assert {failure["category"] for failure in report.failures} == {"normalization"}
    assert all(failure["value"] == pytest.approx(4.0, rel=1e-8) for failure in report.failures)


def test_surface_grid():
    r, theta = surfaceGrid(2.0)
    assert r[0] == pytest.approx(1.0)
    assert r[-1] == pytest.approx(6.0)
    assert theta[0] == pytest.approx(math.pi / 2.0 - 1.0)
    assert len(theta) == 41


def test_surfaces_are_written(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    config = RunConfig(COMMAND.FIGURES, molecule="ScH", etas=(0.0, 1.0))
    surface = potentialSurface(config, VARIANT.MODIFIED_KRATZER)
    assert len(surface) == 2 * 51 * 41
    minimum = min(row["potential"] for row in surface.rows)
    assert minimum == pytest.approx(0.0, abs=1e-12)
    paths = saveFigures({"surface-modified": surface}, config)
    assert paths == [f"{DEFAULT_FIGURE_DIRECTORY}/surface-modified.csv"]
    assert (tmp_path / DEFAULT_FIGURE_DIRECTORY / "surface-modified.csv").exists()


def test_parser_defaults():
    arguments = buildParser().parse_args(["spectrum"])
    config = RunConfig.fromArguments(arguments)
    assert config.command is COMMAND.SPECTRUM
    assert config.nRange == (0, 2)
    assert config.etas == (0.0,)
    assert config.outputFormat is OUTPUT_FORMAT.CSV
    assert config.variants == (VARIANT.KRATZER_FUES, VARIANT.MODIFIED_KRATZER)


def test_cli_spectrum_json(tmp_path):
    path = tmp_path / "spectrum.json"
    status = main(
        ["spectrum", "--molecule", "ScH", "--n", "0", "--ntilde", "0", "--m", "0", "--eta", "10", "--format", "json", "--out", str(path)]
    )
    assert status == EXIT_SUCCESS
    records = json.loads(path.read_text())
    assert len(records) == 2
    assert sorted(record["energy"] for record in records) == pytest.approx([-2.2028638473033, 0.047136152697], abs=5e-6)


def test_cli_spectrum_to_stdout(capsys):
    assert main(["spectrum", "--De", "15", "--re", "0.8", "--mu", "1", "--n", "0", "--ntilde", "0", "--m", "0"]) == EXIT_SUCCESS
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("molecule,variant,units,n,ntilde,m,eta")
    assert len(lines) == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["spectrum", "--n", "3..1"],
        ["spectrum", "--molecule", "XeF"],
        ["spectrum", "--De", "1"],
        ["spectrum", "--eta", "-1"],
        ["orbit"],
    ],
)
def test_cli_usage_errors(argv, capsys):
    assert main(argv) == EXIT_USAGE
    assert capsys.readouterr().err != ""


def test_cli_help(capsys):
    assert main(["--help"]) == EXIT_SUCCESS
    assert "mie-ring" in capsys.readouterr().out


def test_cli_tables(tmp_path):
    status = main(["tables", "--molecule", "ScH", "--states", "2", "--out", str(tmp_path)])
    assert status == EXIT_SUCCESS
    for tableId in TABLE_ID:
        assert (tmp_path / f"{tableId.toString()}.csv").exists()


def test_exit_codes_are_distinct():
    assert len({EXIT_SUCCESS, EXIT_VERIFICATION_FAILURE, EXIT_USAGE}) == 3


def test_sweep_cells():
    energies = energyCell(("mu", 1.0, QuantumNumbers(1, 1, 0), 10.0))
    assert energies["energy_modified"] - energies["energy_kratzer_fues"] == pytest.approx(15.0, rel=1e-12)
    fisher = fisherCell(("re", 0.8, QuantumNumbers(0, 0, 0), 1.0))
    assert fisher["fisher_kratzer_fues"] > 0.0
    assert fisher["fisher_modified"] == pytest.approx(fisher["fisher_kratzer_fues"], rel=1e-10)
    assert fisher["series"] == "fisher-vs-re"


def test_figure_series():
    figures = runFigures(RunConfig(COMMAND.FIGURES))
    assert list(figures)[:2] == ["surface-modified-kratzer", "surface-kratzer-fues"]
    for parameter, values in SWEEPS.items():
        assert len(figures[f"energy-vs-{parameter}"]) == 3 * len(values)
        assert len(figures[f"fisher-vs-{parameter}"]) == 2 * 3 * len(values)
