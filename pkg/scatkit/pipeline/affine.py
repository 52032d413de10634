"""Integral affine structure with one singularity, built from self-intersection numbers."""
import logging
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from scatkit.models import (
    E1,
    E2,
    ONE,
    CoeffMonomial,
    LatticeVector,
    LaurentPoly,
    UnimodularMap,
    Wall,
    map_order,
    pair,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AffineStructure:
    """Rays v_0 .. v_{n+1} developed in one plane, with chart transitions A_1 .. A_n."""

    selfints: tuple[int, ...]
    rays: tuple[LatticeVector, ...]
    transitions: tuple[UnimodularMap, ...]

    @property
    def n(self) -> int:
        return len(self.selfints)

    def ray(self, i: int) -> LatticeVector:
        return self.rays[i]

    def selfint(self, i: int) -> int:
        return self.selfints[(i - 1) % self.n]

    def chart(self, i: int) -> UnimodularMap:
        """psi_i: sends v_{i-1} to (1,0) and v_i to (0,1); 1 <= i <= n+1."""
        return UnimodularMap.from_columns(self.rays[i - 1], self.rays[i]).inverse()


def build_bghk(selfints: Sequence[int]) -> AffineStructure:
    """Develop v_{i+1} = -v_{i-1} - D_i^2 v_i from v_1 = (1,0), v_2 = (0,1)."""
    d = tuple(int(x) for x in selfints)
    if len(d) < 3:
        raise ValueError("need at least three self-intersection numbers")
    n = len(d)
    rays = {1: E1, 2: E2}
    rays[0] = -rays[2] - rays[1] * d[0]
    for i in range(2, n + 1):
        rays[i + 1] = -rays[i - 1] - rays[i] * d[i - 1]
    transitions = tuple(UnimodularMap.from_rows((-d[i], 1), (-1, 0)) for i in range(n))
    logger.debug("built affine structure for %s", d)
    return AffineStructure(d, tuple(rays[i] for i in range(n + 2)), transitions)


def global_monodromy(structure: AffineStructure) -> UnimodularMap:
    """A_n ... A_1."""
    out = UnimodularMap.identity()
    for a in structure.transitions:
        out = a @ out
    return out


def recurrence_identity_check(structure: AffineStructure) -> bool:
    """v_{i-1} + D_i^2 v_i + v_{i+1} = 0 for 1 <= i <= n."""
    return all(
        (structure.ray(i - 1) + structure.ray(i) * structure.selfint(i) + structure.ray(i + 1)).is_zero()
        for i in range(1, structure.n + 1)
    )


def chart_relations_check(structure: AffineStructure) -> bool:
    """Chart images of v_{i-1}, v_i, v_{i+1} and A_i psi_i = psi_{i+1}."""
    for i in range(1, structure.n + 1):
        psi = structure.chart(i)
        if psi @ structure.ray(i - 1) != E1 or psi @ structure.ray(i) != E2:
            return False
        if psi @ structure.ray(i + 1) != LatticeVector(-1, -structure.selfint(i)):
            return False
        if structure.transitions[i - 1] @ psi != structure.chart(i + 1):
            return False
    return True


def monodromy_conjugacy_check(structure: AffineStructure, m: UnimodularMap, cap: int = 12) -> bool:
    """Equal trace, determinant and order."""
    g = global_monodromy(structure)
    return g.trace == m.trace and g.det == m.det and map_order(g, cap) == map_order(m, cap)


@dataclass(frozen=True)
class MultiValuedPL:
    """Linear pieces on the cones sigma_{j,j+1} (0 <= j <= n), valued in curve classes.

    A piece is stored as its values on e1 and e2; crossing ray v_j adds n_j (x) bend_j
    with n_j(w) = <v_j, w>.
    """

    structure: AffineStructure
    pieces: tuple[tuple[CoeffMonomial, CoeffMonomial], ...]
    bends: tuple[CoeffMonomial, ...]

    def value(self, cone: int, w: LatticeVector) -> CoeffMonomial:
        f1, f2 = self.pieces[cone]
        return f1 ** w.a * f2 ** w.b


def _bend(v: LatticeVector, cls: CoeffMonomial) -> tuple[CoeffMonomial, CoeffMonomial]:
    return cls ** pair(v, E1), cls ** pair(v, E2)


def build_pl_function(
    structure: AffineStructure,
    classes: Sequence[CoeffMonomial],
    bending: Optional[Mapping[int, CoeffMonomial]] = None,
) -> MultiValuedPL:
    """Zero on sigma_{1,2}; bends by classes[j-1] across v_j unless `bending` overrides it."""
    if len(classes) != structure.n:
        raise ValueError("need one class per ray")
    bends = [None] + [classes[j - 1] for j in range(1, structure.n + 1)]
    for j, cls in (bending or {}).items():
        bends[j] = cls
    pieces: dict[int, tuple[CoeffMonomial, CoeffMonomial]] = {1: (ONE, ONE)}
    b1, b2 = _bend(structure.ray(1), bends[1])
    pieces[0] = (ONE / b1, ONE / b2)
    for j in range(2, structure.n + 1):
        prev = pieces[j - 1]
        b1, b2 = _bend(structure.ray(j), bends[j])
        pieces[j] = (prev[0] * b1, prev[1] * b2)
    return MultiValuedPL(structure, tuple(pieces[j] for j in range(structure.n + 1)), tuple(bends[1:]))


def pl_section_check(
    structure: AffineStructure,
    classes: Sequence[CoeffMonomial],
    bending: Optional[Mapping[int, CoeffMonomial]] = None,
) -> bool:
    """phi(v_{i-1}) + phi(v_{i+1}) = [D_i] - D_i^2 phi(v_i) around every ray.

    Written multiplicatively in the curve-class group. The same identity read on
    beta_i = phi(v_i) is the homology relation beta_{i-1} + D_i^2 beta_i + beta_{i+1} = [D_i].
    """
    phi = build_pl_function(structure, classes, bending)
    for i in range(1, structure.n + 1):
        d2 = structure.selfint(i)
        left = phi.value(i - 1, structure.ray(i - 1)) * phi.value(i, structure.ray(i + 1))
        right = classes[i - 1] * phi.value(i - 1, structure.ray(i)) ** -d2
        if left != right:
            return False
        # continuity on the ray itself
        if phi.value(i - 1, structure.ray(i)) != phi.value(i, structure.ray(i)):
            return False
    return True


def divisor_classes(n: int) -> list[CoeffMonomial]:
    return [CoeffMonomial.gen(f"[D_{i}]") for i in range(1, n + 1)]


@dataclass(frozen=True)
class GluingRelation:
    """X_{i-1} X_{i+1} = rhs, with rhs written in chart-i variables X_{i-1} = z^(1,0), X_i = z^(0,1)."""

    index: int
    rhs: LaurentPoly
    text: str


def gluing_ring_relation(structure: AffineStructure, i: int, wall: Optional[Wall] = None) -> GluingRelation:
    """z^{[D_i]} X_i^{-D_i^2} f_i with f_i = prod_j (1 + c_j X_i^{-1}); f_i = 1 without a wall."""
    d2 = structure.selfint(i)
    kink = wall.kink if wall is not None else CoeffMonomial.gen(f"[D_{i}]")
    coeffs = wall.coeffs if wall is not None else ()
    rhs = LaurentPoly.monomial(LatticeVector(0, -d2), kink)
    for c in coeffs:
        rhs = rhs * (LaurentPoly.constant(1) + LaurentPoly.monomial(LatticeVector(0, -1), c))
    return GluingRelation(i, rhs, _render(i, d2, kink, coeffs))


def gluing_relations_check(structure: AffineStructure) -> bool:
    """Without walls, X_{i-1} X_{i+1} read through chart psi_i is the right-hand side of the gluing relation."""
    for i in range(1, structure.n + 1):
        psi = structure.chart(i)
        kink = CoeffMonomial.gen(f"[D_{i}]")
        product = LaurentPoly.monomial(psi @ structure.ray(i - 1) + psi @ structure.ray(i + 1), kink)
        if product != gluing_ring_relation(structure, i).rhs:
            return False
    return True


def _render(i: int, d2: int, kink: CoeffMonomial, coeffs: Sequence[CoeffMonomial]) -> str:
    xi = f"X_{i}"
    parts = [] if kink.is_one else [f"z^{kink}"]
    power = -d2 - len(coeffs)
    if power == 1:
        parts.append(xi)
    elif power != 0:
        parts.append(f"{xi}^{power}")
    for c in coeffs:
        parts.append(f"({xi} + {'1' if c.is_one else f'z^{c}'})")
    return f"X_{i - 1} X_{i + 1} = " + (" ".join(parts) or "1")


def relation_in_theta_lattice(
    relation: GluingRelation, gamma_prev: LatticeVector, gamma_i: LatticeVector
) -> LaurentPoly:
    """Rewrite the chart-i relation with X_{i-1} = z^{-gamma_{i-1}}, X_i = z^{-gamma_i}."""
    ident = UnimodularMap.from_columns(-gamma_prev, -gamma_i)
    return relation.rhs.map_lattice(ident)
