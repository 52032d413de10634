import json
from pathlib import Path

import pytest
from pydantic import ValidationError

from scatkit.checks.engine import run_bghk, run_case, run_family, wall_rows
from scatkit.config import Settings
from scatkit.main import main
from scatkit.pipeline.cases import CaseId
from scatkit.render.svg import render_svg_text
from scatkit.schemas import CheckResult, Report


def _read(path: Path) -> dict:
    return json.loads(path.read_text(encoding="utf-8"))


def test_report_schema_key_and_sorting():
    report = Report(command="check angles", checks=[CheckResult(name="x", passed=True)])
    text = report.to_json()
    data = json.loads(text)
    assert data["schema"] == "scatkit/1"
    assert "timing" not in data
    assert list(data) == sorted(data)


def test_report_rejects_unknown_fields():
    with pytest.raises(ValidationError):
        CheckResult(name="x", passed=True, extra=1)


def test_settings_bounds():
    with pytest.raises(ValidationError):
        Settings(truncation=0)
    with pytest.raises(ValidationError):
        Settings(period_grid=10)
    with pytest.raises(ValidationError):
        Settings(period_u0=(0.01,))
    assert Settings().truncation == 20


def test_settings_ignore_environment(monkeypatch):
    monkeypatch.setenv("TRUNCATION", "3")
    assert Settings().truncation == 20


def test_wall_rows(a2):
    rows = wall_rows(a2)
    assert [r.boundary_class for r in rows] == ["-e1", "e2", "e1+e2", "e1", "-e2"]
    assert rows[1].angle == "2/5*pi"
    assert rows[0].angle == "0"
    assert rows[2].function == "(1 + z^{e1+e2})"


def test_run_case_a2():
    report = run_case(CaseId.II, Settings())
    names = [c.name for c in report.checks]
    assert len(names) == len(set(names))
    for name in ("loop_consistency", "exchange_relations", "cone_containment", "trop_loop", "pl_section"):
        assert name in names
    assert report.all_passed, [c.name for c in report.checks if not c.passed]


def test_run_case_a2_ghk():
    report = run_case(CaseId.II, Settings(coeffs="ghk"))
    names = [c.name for c in report.checks]
    assert "exchange_relations_ghk" in names
    assert "theta_specialization" in names
    assert report.all_passed, [c.name for c in report.checks if not c.passed]


@pytest.mark.parametrize("family", ["pentagon", "angles", "affine"])
def test_families_pass(family):
    report = run_family(family, Settings(pentagon_samples=10))
    assert report.command == f"check {family}"
    assert report.all_passed


def test_unknown_family():
    with pytest.raises(ValueError):
        run_family("nope", Settings())


def test_bghk_report():
    report = run_bghk([-1, -2] * 3, Settings())
    assert report.all_passed
    gluing = next(c for c in report.checks if c.name == "gluing_relations")
    assert len(gluing.witnesses) == 6
    assert gluing.passed


def test_cli_check_writes_json(tmp_path, capsys):
    out = tmp_path / "angles.json"
    assert main(["check", "angles", "--out", str(out)]) == 0
    data = _read(out)
    assert data["command"] == "check angles"
    assert data["case"] is None
    assert "PASS" in capsys.readouterr().out


def test_cli_reports_are_byte_identical(tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["check", "affine", "--out", str(first)]) == 0
    assert main(["check", "affine", "--out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_cli_timing_block(tmp_path):
    out = tmp_path / "t.json"
    assert main(["check", "angles", "--timing", "--out", str(out)]) == 0
    assert "angles" in _read(out)["timing"]


def test_cli_bghk(tmp_path):
    out = tmp_path / "bghk.json"
    assert main(["bghk", "--selfints=-1,-1,-1,-1,-1", "--out", str(out)]) == 0
    assert _read(out)["command"] == "bghk"


def test_cli_rejects_ghk_for_g2():
    assert main(["case", "g2", "--coeffs", "ghk"]) == 2


def test_cli_rejects_bad_truncation():
    assert main(["check", "angles", "--truncation", "0"]) == 2


def test_cli_rejects_unknown_log_level():
    assert main(["check", "angles", "--log-level", "BOGUS"]) == 2


def test_cli_log_level_is_case_insensitive(tmp_path):
    assert main(["check", "angles", "--log-level", "debug", "--out", str(tmp_path / "a.json")]) == 0


def test_cli_malformed_flags():
    with pytest.raises(SystemExit) as exc:
        main(["case", "e8"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["bghk", "--selfints=1,x"])


def test_svg(tmp_path):
    out = tmp_path / "a2.svg"
    assert main(["svg", "a2", "--out", str(out)]) == 0
    text = out.read_text(encoding="utf-8")
    assert text.startswith("<svg")
    assert text.count('class="wall"') == 5
    assert text.count('class="cut"') == 1
    assert text.count('class="function"') == 5
    assert ">(1 + z^{e1+e2})</tspan>" in text


def test_svg_cluster_form(a2):
    text = render_svg_text(a2, cluster_form=True)
    assert text.count('class="cut"') == 2
    assert "M₁" in text and "M₂" in text


def test_svg_unwritable(tmp_path):
    assert main(["svg", "b2", "--out", str(tmp_path / "missing" / "b2.svg")]) == 2
