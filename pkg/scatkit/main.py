"""Command-line entry point."""
import argparse
import logging
import logging.config
import sys
from pathlib import Path
from typing import Optional, Sequence

from pydantic import ValidationError

from scatkit.checks.engine import FAMILIES, run_bghk, run_case, run_family
from scatkit.config import Settings
from scatkit.errors import GhkUnavailableError, RenderError
from scatkit.pipeline.cases import CaseId, build_case
from scatkit.render.svg import render_svg
from scatkit.schemas import CheckResult, Report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_REJECTED = 2


def configure_logging(level: str = "INFO") -> None:
    """Structured console logging on stderr; stdout carries only reports and summaries."""
    logging.config.dictConfig({
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "default": {
                "format": "%(asctime)s [%(levelname)s] %(name)s: %(message)s",
                "datefmt": "%Y-%m-%dT%H:%M:%S",
            },
        },
        "handlers": {
            "console": {
                "class": "logging.StreamHandler",
                "formatter": "default",
                "stream": "ext://sys.stderr",
            },
        },
        "root": {
            "level": level.upper(),
            "handlers": ["console"],
        },
    })


def parse_selfints(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}") from None
    if len(values) < 3:
        raise argparse.ArgumentTypeError("need at least three self-intersection numbers")
    return values


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--coeffs", choices=("specialized", "ghk"), default="specialized")
    common.add_argument("--out", default=None, help="write the JSON report (or SVG) here")
    common.add_argument("--truncation", type=int, default=20)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--log-level", type=str.upper, default="INFO")
    common.add_argument("--timing", action="store_true")

    parser = argparse.ArgumentParser(prog="scatkit", description="Exact checks on rank-2 scattering diagrams.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_case = sub.add_parser("case", parents=[common], help="build a case diagram and run every check")
    p_case.add_argument("case", type=str.lower, choices=("a2", "b2", "g2"))
    p_case.add_argument("--periods", action="store_true", help="run the numeric period oracle")

    p_check = sub.add_parser("check", parents=[common], help="run one family of checks")
    p_check.add_argument("family", choices=FAMILIES)

    p_bghk = sub.add_parser("bghk", parents=[common], help="affine structure from self-intersections")
    p_bghk.add_argument("--selfints", type=parse_selfints, required=True, help="e.g. --selfints=-1,-1,-1,-1,-1")

    p_svg = sub.add_parser("svg", parents=[common], help="draw the rays of a case diagram")
    p_svg.add_argument("case", type=str.lower, choices=("a2", "b2", "g2"))
    p_svg.add_argument("--cluster-form", action="store_true")
    return parser


def _settings_from(args: argparse.Namespace) -> Settings:
    return Settings(
        coeffs=args.coeffs,
        out=args.out,
        truncation=args.truncation,
        seed=args.seed,
        log_level=args.log_level,
        timing=args.timing,
        periods=getattr(args, "periods", False),
        cluster_form=getattr(args, "cluster_form", False),
    )


def _summary(checks: Sequence[CheckResult]) -> str:
    lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}" for c in checks]
    passed = sum(c.passed for c in checks)
    lines.append(f"{passed}/{len(checks)} checks passed")
    return "\n".join(lines)


def _emit(report: Report, settings: Settings) -> int:
    text = report.to_json()
    if settings.out:
        try:
            Path(settings.out).write_text(text, encoding="utf-8")
        except OSError as e:
            logger.error("cannot write report to %s: %s", settings.out, e)
            return EXIT_REJECTED
        print(_summary(report.checks))
    else:
        sys.stdout.write(text)
    return EXIT_OK if report.all_passed else EXIT_CHECK_FAILED


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = _settings_from(args)
    except ValidationError as e:
        configure_logging("INFO")
        logger.error("invalid flags: %s", e)
        return EXIT_REJECTED
    configure_logging(settings.log_level)

    try:
        if args.command == "case":
            report = run_case(CaseId.parse(args.case), settings)
        elif args.command == "check":
            report = run_family(args.family, settings)
        elif args.command == "bghk":
            report = run_bghk(args.selfints, settings)
        else:
            diagram = build_case(CaseId.parse(args.case), settings.coeffs)
            target = render_svg(diagram, settings.out or f"{args.case}.svg", settings.cluster_form)
            print(f"wrote {target}")
            return EXIT_OK
    except (GhkUnavailableError, RenderError) as e:
        logger.error("%s", e)
        return EXIT_REJECTED
    return _emit(report, settings)


if __name__ == "__main__":
    sys.exit(main())
