"""Ray pictures of case diagrams, rendered through a Jinja2 template."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np
from jinja2 import Environment, FileSystemLoader, select_autoescape

from scatkit.errors import RenderError
from scatkit.models import E1, E2, ScatteringDiagram, picard_lefschetz

logger = logging.getLogger(__name__)
templates_dir = Path(__file__).parent.parent / "templates"

SIZE = 480
RADIUS = 170.0
LABEL_RADIUS = 205.0


@dataclass(frozen=True)
class RayGlyph:
    x: str
    y: str
    lx: str
    ly: str
    label: str
    detail: str


def _point(angle: Fraction, r: float) -> tuple[str, str]:
    t = float(angle) * np.pi
    c = SIZE / 2
    # svg y grows downward
    return f"{c + r * np.cos(t):.3f}", f"{c - r * np.sin(t):.3f}"


def _glyph(angle: Fraction, label: str, detail: str) -> RayGlyph:
    x, y = _point(angle, RADIUS)
    lx, ly = _point(angle, LABEL_RADIUS)
    return RayGlyph(x, y, lx, ly, label, detail)


def render_svg_text(diagram: ScatteringDiagram, cluster_form: bool = False) -> str:
    env = Environment(
        loader=FileSystemLoader(str(templates_dir)),
        autoescape=select_autoescape(["svg", "j2"], default_for_string=True),
        keep_trailing_newline=True,
    )
    rays = [
        _glyph(w.angle, f"l_{i} {w.boundary_class}", w.describe_function())
        for i, w in enumerate(diagram.walls, start=1)
    ]
    if cluster_form:
        d2 = diagram.wall(2).multiplicity
        cuts = [
            _glyph(diagram.wall(1).angle, "M₁", str(picard_lefschetz(E1))),
            _glyph(diagram.wall(diagram.n).angle, "M₂", str(picard_lefschetz(E2) ** d2)),
        ]
    else:
        cuts = [_glyph(diagram.cut_angle, "cut", f"M = {diagram.monodromy}")]
    template = env.get_template("diagram.svg.j2")
    return template.render(
        size=SIZE,
        center=f"{SIZE / 2:.3f}",
        title=f"case {diagram.case} ({diagram.coeff_mode})",
        rays=rays,
        cuts=cuts,
    )


def render_svg(diagram: ScatteringDiagram, path: str, cluster_form: bool = False) -> Path:
    """Write the picture; an unwritable path raises RenderError."""
    text = render_svg_text(diagram, cluster_form)
    target = Path(path)
    try:
        target.write_text(text, encoding="utf-8")
    except OSError as e:
        raise RenderError(f"cannot write {target}: {e}") from e
    logger.info("wrote %s", target)
    return target
