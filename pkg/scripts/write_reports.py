#!/usr/bin/env python3
"""Write the JSON report and SVG picture of every case into one directory."""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from scatkit.checks.engine import run_case
from scatkit.config import Settings
from scatkit.main import configure_logging
from scatkit.pipeline.cases import CaseId, build_case
from scatkit.render.svg import render_svg


def write_reports(out_dir: str = "reports") -> int:
    configure_logging("INFO")
    target = Path(out_dir)
    target.mkdir(parents=True, exist_ok=True)
    failed = 0
    for case in CaseId:
        modes = ("specialized",) if case is CaseId.IV else ("specialized", "ghk")
        for mode in modes:
            report = run_case(case, Settings(coeffs=mode))
            name = f"{case.alias.lower()}_{mode}.json"
            (target / name).write_text(report.to_json(), encoding="utf-8")
            status = "ok" if report.all_passed else "FAILED"
            failed += 0 if report.all_passed else 1
            print(f"{name}: {status}")
        render_svg(build_case(case), str(target / f"{case.alias.lower()}.svg"))
    render_svg(build_case(CaseId.II), str(target / "a2_cluster_form.svg"), cluster_form=True)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(write_reports(sys.argv[1] if len(sys.argv) > 1 else "reports"))
