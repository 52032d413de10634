"""The three finite-type case diagrams and their structural invariants."""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from scatkit.errors import GhkUnavailableError
from scatkit.models import (
    E1,
    E2,
    ONE,
    CoeffMonomial,
    LatticeVector,
    ScatteringDiagram,
    UnimodularMap,
    Wall,
    pair,
)
from scatkit.models.diagram import CoeffMode
from scatkit.pipeline.charges import ray_angle_exact

logger = logging.getLogger(__name__)


class CaseId(str, Enum):
    II = "II"
    III = "III"
    IV = "IV"

    @classmethod
    def parse(cls, text: str) -> "CaseId":
        key = text.strip().upper()
        aliases = {"A2": "II", "B2": "III", "G2": "IV", "2": "II", "3": "III", "4": "IV"}
        key = aliases.get(key, key)
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown case {text!r}; use a2, b2 or g2") from None

    @property
    def alias(self) -> str:
        return {"II": "A2", "III": "B2", "IV": "G2"}[self.value]


@dataclass(frozen=True)
class CaseData:
    classes: tuple[LatticeVector, ...]
    selfints: tuple[int, ...]
    monodromy: UnimodularMap
    shift: int
    d2: int
    order: int


def _alternating(n: int, odd: int, even: int) -> tuple[int, ...]:
    return tuple(odd if i % 2 == 1 else even for i in range(1, n + 1))


CASES = {
    CaseId.II: CaseData(
        classes=(-E1, E2, E1 + E2, E1, -E2),
        selfints=(-1,) * 5,
        monodromy=UnimodularMap.from_rows((0, 1), (-1, 1)),
        shift=1,
        d2=1,
        order=6,
    ),
    CaseId.III: CaseData(
        classes=(-E1, E2, E1 + 2 * E2, E1 + E2, E1, -E2),
        selfints=_alternating(6, -1, -2),
        monodromy=UnimodularMap.from_rows((-1, 1), (-2, 1)),
        shift=2,
        d2=2,
        order=4,
    ),
    CaseId.IV: CaseData(
        classes=(-E1, E2, E1 + 3 * E2, E1 + 2 * E2, 2 * E1 + 3 * E2, E1 + E2, E1, -E2),
        selfints=_alternating(8, -1, -3),
        monodromy=UnimodularMap.from_rows((-2, 1), (-3, 1)),
        shift=4,
        d2=3,
        order=3,
    ),
}


def _ghk_coeffs(case: CaseId, i: int, d: int) -> tuple[tuple[CoeffMonomial, ...], CoeffMonomial]:
    kink = CoeffMonomial.gen(f"[D_{i}]")
    if case is CaseId.II:
        return (CoeffMonomial.gen(f"[E_{i}]"),), kink
    if case is CaseId.III:
        if d == 1:
            return (CoeffMonomial.gen(f"[C_{i}]"),), kink
        return tuple(CoeffMonomial.gen(f"[C_{i}^{j}]") for j in range(1, d + 1)), kink
    raise GhkUnavailableError("curve-class coefficients are not available for case IV (G2)")


def build_case(case: CaseId, coeff_mode: CoeffMode = "specialized") -> ScatteringDiagram:
    """Walls in counterclockwise order from the cut, with exact ray angles."""
    case = case if isinstance(case, CaseId) else CaseId.parse(case)
    data = CASES[case]
    walls = []
    for i, gamma in enumerate(data.classes, start=1):
        d = -data.selfints[i - 1]
        angle = ray_angle_exact(case.value, i)
        if coeff_mode == "ghk":
            coeffs, kink = _ghk_coeffs(case, i, d)
        else:
            coeffs, kink = (ONE,) * d, ONE
        walls.append(Wall(gamma, coeffs, angle, kink, label=f"l_{i}"))
    n = len(walls)
    gap = Fraction(2, n)
    cut = walls[-1].angle + gap / 2
    logger.debug("built case %s (%s) with %d walls", case.value, coeff_mode, n)
    return ScatteringDiagram(
        case=case.value,
        walls=tuple(walls),
        selfints=data.selfints,
        monodromy=data.monodromy,
        cut_angle=cut,
        coeff_mode=coeff_mode,
    )


def recurrence_check(diagram: ScatteringDiagram) -> bool:
    """gamma_{i+1} = -gamma_{i-1} - D_i^2 gamma_i for every consecutive triple."""
    for i in range(1, diagram.n + 1):
        lhs = diagram.extended_class(i + 1)
        rhs = -diagram.extended_class(i - 1) - diagram.extended_class(i) * diagram.selfint(i)
        if lhs != rhs:
            return False
    return True


def adjacency_check(diagram: ScatteringDiagram) -> bool:
    """<gamma_{i+1}, gamma_i> = 1 for consecutive walls."""
    return all(
        pair(diagram.extended_class(i + 1), diagram.extended_class(i)) == 1 for i in range(0, diagram.n + 1)
    )


def shift_check(diagram: ScatteringDiagram) -> bool:
    """M gamma_k = gamma_{k+s} along the periodic class sequence."""
    data = CASES[CaseId(diagram.case)]
    m = diagram.monodromy
    period = diagram.n + data.shift
    seq = diagram.periodic_classes(2 * period + data.shift)
    if seq[period:2 * period] != seq[:period]:
        return False
    if m @ diagram.classes[-1] != diagram.extended_class(0):
        return False
    return all(m @ seq[k] == seq[k + data.shift] for k in range(period))
