import json

import pytest

from cli.app import EXIT_FAILURE, EXIT_OK, EXIT_PARSE, main
from core.catalog import catalog_diagram, catalog_names
from core.td_format import parse_diagram, render_diagram

BAD_HEEGAARD = "td 1\nname bad\nsurface 1 0\nparams 1 0 0 0\nalpha 1 0\nbeta 0 1\ngamma 1 0\n"


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_distinguish_parity(capsys):
    assert main(["distinguish", "S2xD2_A", "S2xD2_B", "--expect-distinct"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "DISTINCT" in out
    assert "parity" in out


def test_distinguish_inconclusive(capsys):
    assert main(["distinguish", "CP2", "CP2"]) == EXIT_OK
    assert main(["distinguish", "CP2", "CP2", "--expect-distinct"]) == EXIT_FAILURE
    assert "INCONCLUSIVE" in capsys.readouterr().out


def test_invariants_structured(capsys):
    assert main(["invariants", "CP2", "--format", "structured"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["kind"] == "invariants"
    assert payload["signature"] == 1
    assert payload["parity"] == "odd"
    assert payload["form_matrix"] == [[1]]


def test_format_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("TRISECT_FORMAT", "structured")
    assert main(["invariants", "S4"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["b2"] == 0


def test_batch_keeps_order(capsys):
    names = ["S2xS2", "CP2", "CP2BAR", "S4", "S1xS3"]
    assert main(["invariants", *names]) == EXIT_OK
    out = capsys.readouterr().out
    positions = [out.index(f"불변량: {name}\n") for name in names]
    assert positions == sorted(positions)


def test_validate_exit_codes(tmp_path, capsys):
    good = _write(tmp_path, "cp2.td", render_diagram(catalog_diagram("CP2")))
    bad = _write(tmp_path, "bad.td", BAD_HEEGAARD)
    broken = _write(tmp_path, "broken.td", "td 1\nsurface 1\n")
    assert main(["validate", good]) == EXIT_OK
    assert main(["validate", bad]) == EXIT_FAILURE
    assert "not_heegaard" in capsys.readouterr().out.lower()
    assert main(["validate", broken]) == EXIT_PARSE


def test_strict_rejects_invalid(tmp_path):
    bad = _write(tmp_path, "bad.td", BAD_HEEGAARD)
    assert main(["invariants", bad, "--strict"]) == EXIT_FAILURE


def test_unknown_name():
    assert main(["invariants", "NOT_A_MANIFOLD"]) == EXIT_FAILURE


def test_cap_all(capsys):
    assert main(["cap", "S2xD2_A"]) == EXIT_OK
    out = capsys.readouterr().out
    assert parse_diagram(out) == catalog_diagram("S2xS2")
    assert "# 2-핸들 0개, 4-핸들 1개" in out


def test_cap_component(capsys):
    assert main(["cap", "TRIVIAL(3)", "--component", "2"]) == EXIT_OK
    capped = parse_diagram(capsys.readouterr().out)
    assert capped.surface.boundary_count == 2


def test_sums(capsys):
    assert main(["sum", "CP2", "CP2BAR"]) == EXIT_OK
    assert parse_diagram(capsys.readouterr().out).params.as_tuple() == (2, 0, 0, 0)
    assert main(["bsum", "E2_A", "D4"]) == EXIT_OK
    assert parse_diagram(capsys.readouterr().out).params == catalog_diagram("E2_A").params
    assert main(["bsum", "CP2", "D4"]) == EXIT_FAILURE


def test_stabilize_params(capsys):
    assert main(["stabilize", "1,1,0,2", "--type", "I"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "(2,2;0,3)"
    assert main(["stabilize", "2,2,0,3", "--type", "I", "--destab"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "(1,1;0,2)"


def test_stabilize_diagram(capsys):
    assert main(["stabilize", "D4", "--type", "I", "--sign", "-1"]) == EXIT_OK
    stabilized = parse_diagram(capsys.readouterr().out)
    assert stabilized.params.as_tuple() == (1, 1, 0, 2)
    assert main(["stabilize", "D4", "--type", "II"]) == EXIT_FAILURE
    assert main(["stabilize", "TRIVIAL(2)", "--type", "I", "--destab"]) == EXIT_FAILURE


def test_audit_moves(capsys):
    args = ["audit-moves", "--start", "2,1,0,1", "--moves", "1,0,0,0"]
    assert main([*args, "--end", "3,2,0,2"]) == EXIT_OK
    assert main([*args, "--end", "2,1,0,1"]) == EXIT_FAILURE
    assert main(["audit-moves", "--start", "3,3,0,4", "--moves", "0,0,0,0",
                 "--end", "0,0,0,1", "--format", "structured"]) == EXIT_FAILURE
    out = capsys.readouterr().out
    assert '"defect": -3' in out


def test_audit_euler(capsys):
    assert main(["audit-euler", "--params", "1,1,0,2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "차이 +3" in out
    assert main(["audit-euler", "--format", "structured"]) == EXIT_OK
    audits = json.loads(capsys.readouterr().out)["audits"]
    assert all(a["consistent"] for a in audits if a["label"].endswith("(구현)"))


@pytest.mark.parametrize("args", [["--params", "1,1"], ["CP2", "--n", "x"]])
def test_audit_euler_bad_arguments(args):
    with pytest.raises(SystemExit):
        main(["audit-euler", *args])


def test_catalog_commands(tmp_path, capsys):
    assert main(["catalog", "list"]) == EXIT_OK
    listing = capsys.readouterr().out
    assert "S2xD2_A" in listing and "reconstruction" in listing

    assert main(["catalog", "show", "CP2"]) == EXIT_OK
    assert parse_diagram(capsys.readouterr().out) == catalog_diagram("CP2")

    target = tmp_path / "e2.td"
    assert main(["catalog", "export", "E2_A", "-o", str(target)]) == EXIT_OK
    assert parse_diagram(target.read_text(encoding="utf-8")) == catalog_diagram("E2_A")

    out_dir = tmp_path / "all"
    assert main(["catalog", "export", "--all", str(out_dir)]) == EXIT_OK
    assert len(list(out_dir.glob("*.td"))) == len(catalog_names())
    assert main(["catalog", "show"]) == EXIT_FAILURE


def test_mixed_batch_reports_every_reference(tmp_path, capsys, caplog):
    broken = _write(tmp_path, "broken.td", "td 1\nsurface 1\n")
    bad = _write(tmp_path, "bad.td", BAD_HEEGAARD)
    assert main(["validate", "CP2", broken, bad, "S2xS2"]) == EXIT_PARSE
    captured = capsys.readouterr()
    out = captured.out.splitlines()
    assert out[0] == "CP2: 유효한 도표"
    assert out[1].startswith("bad: 검증 실패")
    assert out[-1] == "S2xS2: 유효한 도표"
    assert "broken.td" in captured.err
    assert any("bad" in r.getMessage() for r in caplog.records if r.levelname == "WARNING")


def test_invariants_rejects_invalid_diagram(tmp_path, capsys):
    bad = _write(tmp_path, "bad.td", BAD_HEEGAARD)
    assert main(["invariants", bad, "CP2"]) == EXIT_FAILURE
    captured = capsys.readouterr()
    assert "not_heegaard" in captured.err
    assert "불변량: CP2" in captured.out


def test_non_utf8_file_is_a_parse_error(tmp_path):
    path = tmp_path / "binary.td"
    path.write_bytes(b"name \xff\xfe")
    assert main(["validate", str(path)]) == EXIT_PARSE
    assert main(["distinguish", str(path), "CP2"]) == EXIT_PARSE
