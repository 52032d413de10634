"""Tropical shadows of wall crossings on the valuation plane (v(e1), v(e2))."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from math import gcd
from typing import Literal, Optional

import sympy

from scatkit.models import E1, E2, LatticeVector, ScatteringDiagram, UnimodularMap, Wall, pair
from scatkit.pipeline.cases import CaseId, build_case
from scatkit.pipeline.charges import CHARGE_MODELS, ray_angle_exact
from scatkit.schemas import CheckResult

logger = logging.getLogger(__name__)

Piece = tuple[LatticeVector, LatticeVector, UnimodularMap]


def _in_cone(v: LatticeVector, start: LatticeVector, end: LatticeVector) -> bool:
    """v in the closed cone swept counterclockwise from start to end (at most a half-plane)."""
    if pair(start, end) > 0:
        return pair(start, v) >= 0 and pair(v, end) >= 0
    if pair(start, end) == 0 and start.dot(end) < 0:
        return pair(start, v) >= 0
    raise ValueError("cones must be strictly convex or half-planes")


def primitive(v: LatticeVector) -> LatticeVector:
    g = gcd(v.a, v.b)
    return v if g in (0, 1) else LatticeVector(v.a // g, v.b // g)


@dataclass(frozen=True)
class PLMap:
    """Closed cones covering the plane, one integer matrix per cone."""

    pieces: tuple[Piece, ...]

    @classmethod
    def linear(cls, mat: UnimodularMap) -> "PLMap":
        return cls(((E1, -E1, mat), (-E1, E1, mat)))

    def matrix_at(self, v: LatticeVector) -> UnimodularMap:
        for start, end, mat in self.pieces:
            if _in_cone(v, start, end):
                return mat
        raise ValueError(f"{v} is not covered by the map's cones")

    def apply(self, v: LatticeVector) -> LatticeVector:
        return self.matrix_at(v) @ v

    def inverse(self) -> "PLMap":
        out = []
        for start, end, mat in self.pieces:
            a, b = mat @ start, mat @ end
            if mat.det < 0:
                a, b = b, a
            out.append((a, b, mat.inverse()))
        return PLMap(tuple(out))

    def boundary_rays(self) -> list[LatticeVector]:
        seen: list[LatticeVector] = []
        for start, end, _ in self.pieces:
            for r in (primitive(start), primitive(end)):
                if r not in seen:
                    seen.append(r)
        return seen

    def is_continuous(self) -> bool:
        """Every piece containing a boundary ray sends it to the same place."""
        for r in self.boundary_rays():
            images = {mat @ r for start, end, mat in self.pieces if _in_cone(r, start, end)}
            if len(images) != 1:
                return False
        return True


def shear_matrix(gamma: LatticeVector, d: int, sign: int = 1) -> UnimodularMap:
    """v -> v + s d <., gamma> v(gamma), written on (v(e1), v(e2))."""
    k = sign * d
    a, b = gamma.a, gamma.b
    return UnimodularMap.from_rows((1 + k * a * b, k * b * b), (-k * a * a, 1 - k * a * b))


def trop_wall_crossing(w: Wall, sign: int = 1, multiplicity: Optional[int] = None) -> PLMap:
    """Identity where v(gamma) >= 0, the shear where v(gamma) <= 0."""
    gamma = w.boundary_class
    d = w.multiplicity if multiplicity is None else multiplicity
    r = LatticeVector(gamma.b, -gamma.a)
    return PLMap(((r, -r, UnimodularMap.identity()), (-r, r, shear_matrix(gamma, d, sign))))


def chart_shear(diagram: ScatteringDiagram, i: int, chart: Literal["current", "next"] = "current") -> UnimodularMap:
    """Shear of wall gamma_{i+1} in chart coordinates (v(gamma_i), v(gamma_{i+1})) or the next chart."""
    w = diagram.wall(i + 1)
    if chart == "current":
        alpha, beta = diagram.extended_class(i), diagram.extended_class(i + 1)
    else:
        alpha, beta = diagram.extended_class(i + 1), diagram.extended_class(i + 2)
    coords = UnimodularMap.from_rows((alpha.a, alpha.b), (beta.a, beta.b))
    return coords @ shear_matrix(w.boundary_class, w.multiplicity) @ coords.inverse()


def _angle_cmp(u: LatticeVector, v: LatticeVector) -> int:
    def half(x: LatticeVector) -> int:
        return 0 if x.b > 0 or (x.b == 0 and x.a > 0) else 1

    if half(u) != half(v):
        return half(u) - half(v)
    p = pair(u, v)
    return -1 if p > 0 else (1 if p < 0 else 0)


def trop_loop_stages(diagram: ScatteringDiagram, drop: Optional[int] = None) -> list[PLMap]:
    """M^T first, then the shadows of walls n .. 1."""
    stages = [PLMap.linear(diagram.monodromy.transpose())]
    for i in range(diagram.n, 0, -1):
        if i != drop:
            stages.append(trop_wall_crossing(diagram.wall(i)))
    return stages


def refined_fan(stages: list[PLMap]) -> list[LatticeVector]:
    """Axes plus every stage breakpoint pulled back to the source plane, sorted by angle."""
    rays = [E1, E2, -E1, -E2]
    inverses = [s.inverse() for s in stages]
    for k in range(1, len(stages)):
        for b in stages[k].boundary_rays():
            v = b
            for j in range(k - 1, -1, -1):
                v = inverses[j].apply(v)
            v = primitive(v)
            if v not in rays:
                rays.append(v)
    return sorted(rays, key=cmp_to_key(_angle_cmp))


def trop_loop_check(diagram: ScatteringDiagram, drop: Optional[int] = None) -> CheckResult:
    """Composite tropical loop is the identity on every ray of a fan refining all breakpoints."""
    stages = trop_loop_stages(diagram.specialize(), drop)
    fan = refined_fan(stages)
    ok = True
    witnesses = [" ".join(f"({r.a},{r.b})" for r in fan)]
    for r in fan:
        v = r
        for stage in stages:
            v = stage.apply(v)
        if v != r:
            ok = False
            witnesses.append(f"({r.a},{r.b}) -> ({v.a},{v.b})")
    continuous = all(s.is_continuous() for s in stages)
    logger.debug("tropical loop for %s over %d rays: %s", diagram.case, len(fan), ok and continuous)
    return CheckResult(name="trop_loop", passed=ok and continuous, witnesses=witnesses)


def _exact_direction(x: sympy.Expr, y: sympy.Expr) -> LatticeVector:
    if x == 0:
        return LatticeVector(0, 1 if y > 0 else -1)
    ratio = sympy.nsimplify(sympy.radsimp(y / x))
    if not ratio.is_Rational:
        raise ValueError(f"direction ({x}, {y}) is not rational")
    q = Fraction(int(ratio.p), int(ratio.q))
    s = 1 if x > 0 else -1
    return LatticeVector(s * q.denominator, s * q.numerator)


def valuation_direction(theta: Fraction) -> LatticeVector:
    """Direction of (v(e1), v(e2)) at u = e^{i pi theta} for case II, exactly."""
    model = CHARGE_MODELS["II"]
    phase = model.exponent * theta

    def re(k: int, sign: int) -> sympy.Expr:
        total = phase + model.constant(k).phase
        return sign * sympy.cos(sympy.pi * sympy.Rational(total.numerator, total.denominator))

    # gamma_1 = -e1, gamma_2 = e2
    return _exact_direction(re(1, -1), re(2, 1))


def _theta(k: int) -> Fraction:
    q, r = divmod(k - 1, 5)
    return ray_angle_exact("II", r + 1) + 2 * q


def _in_convex_cone(v: LatticeVector, h1: LatticeVector, h2: LatticeVector) -> bool:
    """v = s h1 + t h2 with s, t >= 0."""
    det = pair(h1, h2)
    if det == 0:
        raise ValueError("degenerate cone")
    s = Fraction(pair(v, h2), det)
    t = Fraction(pair(h1, v), det)
    return s >= 0 and t >= 0


def cone_containment_check(case: CaseId = CaseId.II, multiplicity: Optional[int] = None) -> CheckResult:
    """The shear of wall gamma_{i+1} maps U_{i+2} minus U_i^+ into U_{i+1}^+ for every i."""
    case = case if isinstance(case, CaseId) else CaseId.parse(case)
    if case is not CaseId.II:
        raise ValueError("cone containment is defined for case II")
    diagram = build_case(case)
    half_width = 1 / (2 * CHARGE_MODELS["II"].exponent)
    classes = diagram.periodic_classes(diagram.n + 3)
    ok = True
    witnesses = []
    for i in range(1, diagram.n + 1):
        wall = Wall.simple(classes[i], 1)
        shadow = trop_wall_crossing(wall, multiplicity=multiplicity)
        dom = (valuation_direction(_theta(i + 1) + half_width), valuation_direction(_theta(i + 3)))
        tgt = (valuation_direction(_theta(i + 1)), valuation_direction(_theta(i + 2) + half_width))
        images = [shadow.apply(g) for g in dom]
        good = all(_in_convex_cone(v, *tgt) for v in images)
        ok = ok and good
        witnesses.append(
            f"i={i}: " + ", ".join(f"({g.a},{g.b})->({v.a},{v.b})" for g, v in zip(dom, images))
            + f" in cone ({tgt[0].a},{tgt[0].b}),({tgt[1].a},{tgt[1].b})"
        )
    return CheckResult(name="cone_containment", passed=ok, witnesses=witnesses)
