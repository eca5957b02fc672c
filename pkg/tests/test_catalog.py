import pytest

from mie_ring.molecules.catalog_importer import (
    ENERGY_ETAS,
    FISHER_ETAS,
    getCompoundEnergies,
    getFisherEntropies,
    getHydrideEnergies,
    parseCatalog,
    parseGoldenEnergies,
    readLinesFromCatalog,
)
from mie_ring.quantum.error import MieRingCatalogError

HEADER = "name,De_eV,re_angstrom,mu_amu"


def test_embedded_catalog_lines():
    lines = readLinesFromCatalog()
    assert lines[0] == HEADER
    assert len(parseCatalog(lines)) == 10


def test_blank_lines_are_skipped():
    molecules = parseCatalog(["", HEADER, "", "ScH,2.25,1.776,0.986040", "  "])
    assert len(molecules) == 1
    assert molecules[0].re == 1.776


def test_empty_catalog():
    assert parseCatalog([HEADER]) == []


@pytest.mark.parametrize(
    "lines,code",
    [
        (["name,De,re,mu", "ScH,2.25,1.776,0.98"], 1),
        ([HEADER, "ScH,2.25,1.776"], 1),
        ([HEADER, "ScH,2.25,abc,0.98"], 1),
        ([HEADER, "ScH,-2.25,1.776,0.98"], 2),
        ([HEADER, "ScH,2.25,1.776,0"], 2),
    ],
)
def test_malformed_catalogs(lines, code):
    with pytest.raises(MieRingCatalogError) as info:
        parseCatalog(lines)
    assert info.value.errorCode == code


def test_unreadable_catalog(tmp_path):
    with pytest.raises(MieRingCatalogError) as info:
        readLinesFromCatalog(str(tmp_path / "missing.csv"))
    assert info.value.errorCode == 4


def test_energy_tables_have_thirty_rows():
    hydrides = getHydrideEnergies()
    compounds = getCompoundEnergies()
    assert len(hydrides) == 30
    assert len(compounds) == 30
    assert {row.molecule for row in hydrides} == {"ScH", "TiH", "VH", "CrH", "MnH"}
    assert {row.molecule for row in compounds} == {"CuLi", "TiC", "NiC", "ScN", "ScF"}
    assert set(hydrides[0].firstPair) == set(ENERGY_ETAS)


def test_printed_letter_o_is_read_as_zero():
    row = next(
        row for row in getFisherEntropies() if (row.molecule, row.n, row.nTilde, row.m) == ("CrH", 5, 4, 3)
    )
    assert row.values[1.0] == pytest.approx(-0.112730961920, rel=1e-12)
    assert row.values[10.0] == pytest.approx(-0.080053272878, rel=1e-12)


def test_golden_pair_lookup():
    row = next(row for row in getHydrideEnergies() if (row.molecule, row.n, row.nTilde) == ("ScH", 1, 1))
    assert sorted(row.pairFor(0.0)) == pytest.approx(sorted([0.113671329873, -2.1363286701273]))


def test_fisher_table():
    rows = getFisherEntropies()
    assert len(rows) == 60
    assert set(rows[0].values) == set(FISHER_ETAS)


def test_malformed_golden_row():
    with pytest.raises(MieRingCatalogError) as info:
        parseGoldenEnergies("ScH\t0\t0\t0\t0.1\t0.2\n")
    assert info.value.errorCode == 5
