import logging

import pytest

from core.capping import cap_all
from core.catalog import (
    catalog_diagram,
    catalog_entries,
    catalog_get,
    catalog_names,
    catalog_pairs,
    curve,
    load_user_catalog,
)
from core.invariants import closed_report, relative_report
from core.td_format import render_diagram
from core.validator import euler_characteristic, validate_diagram
from models.catalog_entry import Provenance
from models.diagram import DiagramParams, SurfaceModel
from models.errors import UnknownNameError


def test_published_names_resolve():
    for name in ("S4", "CP2", "CP2BAR", "S2xS2", "S1xS3", "TRIVIAL(1)", "TRIVIAL(8)", "D4",
                 "DPLUS", "DMINUS", "S2xD2_A", "S2xD2_B", "E2_A", "E2_B", "CORK_A", "CORK_B",
                 "W01_A", "W01_B", "NCP2(5)", "NCP2(12)"):
        assert catalog_get(name).name == name


def test_unknown_names():
    for name in ("K3", "TRIVIAL(0)", "TRIVIAL(9)", "NCP2(-1)"):
        with pytest.raises(UnknownNameError):
            catalog_get(name)


def test_trivial_two():
    entry = catalog_get("TRIVIAL(2)")
    assert entry.provenance is Provenance.EXACT
    assert entry.diagram.params == DiagramParams.relative(0, 1, 0, 2)
    assert entry.diagram.surface == SurfaceModel(0, 2)
    assert all(len(f) == 0 for f in entry.diagram.families)


def test_d4_is_trivial_one():
    assert catalog_diagram("D4") == catalog_diagram("TRIVIAL(1)")


def test_dplus():
    entry = catalog_get("DPLUS")
    assert entry.provenance is Provenance.RECONSTRUCTION
    assert entry.diagram.params == DiagramParams.relative(1, 1, 0, 2)
    assert cap_all(entry.diagram)[0] == catalog_diagram("CP2")


def test_names_are_listed_once():
    names = catalog_names()
    assert len(names) == len(set(names))
    assert names[0] == "S4"


def test_every_entry_meets_its_obligations():
    for entry in catalog_entries():
        d = entry.diagram
        assert validate_diagram(d).ok, entry.name
        if entry.expected_params is not None:
            assert d.params == entry.expected_params, entry.name
        if entry.expected_closed is not None:
            report = closed_report(d)
            expected = entry.expected_closed
            assert (report.b1, report.b2, report.signature, report.parity) == (
                expected.b1, expected.b2, expected.signature, expected.parity), entry.name
        if entry.expected_relative is not None:
            report = relative_report(d)
            assert report.b1 == entry.expected_relative.b1, entry.name
            assert tuple(map(tuple, report.form_matrix.to_rows())) == entry.expected_relative.form
        if entry.cap_equals is not None:
            assert cap_all(d)[0] == catalog_diagram(entry.cap_equals), entry.name
        if entry.provenance is Provenance.RECONSTRUCTION:
            assert entry.notes


def test_contractible_reconstructions():
    for name in ("CORK_A", "CORK_B", "W01_A", "W01_B"):
        d = catalog_diagram(name)
        assert euler_characteristic(d.params) == 1
        report = relative_report(d)
        assert (report.b1, report.h1_torsion, report.form_matrix.rows) == (0, (), 0)


def test_pairs_share_params_except_w01():
    for first, second in catalog_pairs():
        same = first.diagram.params == second.diagram.params
        assert same == (first.name != "W01_A")


def test_curve_expression():
    s = SurfaceModel(2, 3)
    assert curve(s, "a1 + b2 - 2c2") == (1, 0, 0, 1, 0, -2)
    assert curve(s, "") == (0,) * 6
    with pytest.raises(ValueError):
        curve(s, "c3")
    with pytest.raises(ValueError):
        curve(s, "a1 * b1")


def test_user_catalog(tmp_path):
    (tmp_path / "mine.td").write_text(render_diagram(catalog_diagram("E2_A").renamed("MY_E2")),
                                      encoding="utf-8")
    (tmp_path / "dup.td").write_text(render_diagram(catalog_diagram("CP2")), encoding="utf-8")
    entries = load_user_catalog(tmp_path)
    assert list(entries) == ["MY_E2"]
    entry = entries["MY_E2"]
    assert entry.provenance is Provenance.USER
    assert entry.diagram == catalog_diagram("E2_A")


def test_user_catalog_skips_bad_files(tmp_path, caplog):
    (tmp_path / "a_good.td").write_text(render_diagram(catalog_diagram("E2_B").renamed("MY_E2B")),
                                        encoding="utf-8")
    (tmp_path / "broken.td").write_text("td 1\nsurface 1\n", encoding="utf-8")
    (tmp_path / "invalid.td").write_text(
        "td 1\nname BADUSER\nsurface 1 0\nparams 1 0 0 0\nalpha 1 0\nbeta 0 1\ngamma 1 0\n",
        encoding="utf-8",
    )
    (tmp_path / "binary.td").write_bytes(b"name \xff\xfe")
    with caplog.at_level(logging.WARNING, logger="core.catalog"):
        entries = load_user_catalog(tmp_path)
    assert list(entries) == ["MY_E2B"]
    assert all(validate_diagram(e.diagram).ok for e in entries.values())
    skipped = [r for r in caplog.records if r.levelno == logging.WARNING]
    assert len(skipped) == 3
