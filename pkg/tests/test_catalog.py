from fractions import Fraction
from pathlib import Path

import pytest

from ternlat import catalog
from ternlat.construction import ternary_volume_identity
from ternlat.lattice import det_gram, loads

GOLDEN = Path(__file__).parent / "data" / "golden"
BUILDABLE = [e.name for e in catalog.entries() if e.builder != "t40"]
SMALL = [e.name for e in catalog.entries() if e.dim <= 16 and e.builder != "t40"]


def test_names_unique():
    names = catalog.names(include_aliases=True)
    assert len(names) == len(set(names))


def test_aliases_resolve():
    assert catalog.entry("leech").name == "t24"
    assert catalog.entry("lambda10").name == "t10"
    with pytest.raises(catalog.CatalogError):
        catalog.entry("nosuch")


def test_sources_are_tagged():
    for e in catalog.entries():
        for c in e.expected.values():
            assert c.source in ("stated", "derived")


def test_filters():
    assert {e.name for e in catalog.filter_entries("dim=12")} >= {"k12_codes", "k12_glue", "w12", "s12",
                                                                   "k14_2_sub12", "l12_kappa"}
    assert all(e.dim <= 26 for e in catalog.filter_entries("dim<=26"))
    assert [e.name for e in catalog.filter_entries("kappa")] == ["l12_kappa", "l18_kappa", "l20_kappa",
                                                                 "l22_kappa"]


def test_code_inventory():
    inv = catalog.code_inventory()
    assert "golay12" in inv and "tetracode" in inv


@pytest.mark.parametrize("name", BUILDABLE)
def test_builds_with_declared_rank(name):
    e = catalog.entry(name)
    b = catalog.build(name)
    assert b.lattice.rank == e.dim
    assert b.lattice.name == e.name
    assert b.lattice.scale_squared == e.report_scale


@pytest.mark.parametrize("name", BUILDABLE)
def test_ternary_stages_satisfy_volume_identity(name):
    for st in catalog.build(name).stages:
        assert ternary_volume_identity(st.base, st.code, st.lattice)


@pytest.mark.parametrize("name", sorted(p.stem for p in GOLDEN.glob("*.json")))
def test_golden(name):
    want = loads((GOLDEN / f"{name}.json").read_text())
    got = catalog.build(name).lattice
    assert got.basis == want.basis
    assert got.colweights == want.colweights


def test_t40_needs_code_file():
    with pytest.raises(catalog.MissingCodeData):
        catalog.build("t40")
    path = catalog.data_dir() / "external" / "sd20_6.txt"
    l = catalog.build("t40", {"t40": str(path)}).lattice
    assert det_gram(l) * Fraction(1, 9) ** 40 == 1


def test_t40_env_fallback(monkeypatch):
    monkeypatch.setenv("TERNLAT_T40_CODE", str(catalog.data_dir() / "external" / "sd20_6.txt"))
    assert catalog.build("t40").lattice.rank == 40


def test_sections_use_dual_minimal_normal():
    b = catalog.build("lambda15")
    assert b.lattice.rank == 15
    assert "normal" in b.info
