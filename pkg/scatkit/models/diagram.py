"""Scattering diagram: cyclically ordered walls with a branch cut."""
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Literal

from scatkit.models.lattice import LatticeVector, UnimodularMap
from scatkit.models.wall import Wall

CoeffMode = Literal["specialized", "ghk"]


@dataclass(frozen=True)
class ScatteringDiagram:
    """Walls listed counterclockwise starting just after the cut.

    Chamber k (0 <= k <= n) lies between wall k and wall k+1; chambers 0 and n
    touch the cut from either side. Crossing the cut counterclockwise applies
    the monodromy twist.
    """

    case: str
    walls: tuple[Wall, ...]
    selfints: tuple[int, ...]
    monodromy: UnimodularMap
    cut_angle: Fraction
    coeff_mode: CoeffMode = "specialized"

    @property
    def n(self) -> int:
        return len(self.walls)

    @property
    def classes(self) -> tuple[LatticeVector, ...]:
        return tuple(w.boundary_class for w in self.walls)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(w.multiplicity for w in self.walls)

    def wall(self, i: int) -> Wall:
        """Wall i, 1-based."""
        return self.walls[i - 1]

    def selfint(self, i: int) -> int:
        """D_i^2 with i read cyclically, 1-based."""
        return self.selfints[(i - 1) % len(self.selfints)]

    def extended_class(self, i: int) -> LatticeVector:
        """gamma_i for 0 <= i <= n+1; the two ends come from the boundary recurrence."""
        if 1 <= i <= self.n:
            return self.walls[i - 1].boundary_class
        cls = self.classes
        if i == 0:
            return -cls[1] - cls[0] * self.selfint(1)
        if i == self.n + 1:
            return -cls[-2] - cls[-1] * self.selfint(self.n)
        raise IndexError(f"class index {i} outside 0..{self.n + 1}")

    def periodic_classes(self, count: int) -> list[LatticeVector]:
        """gamma_1 .. gamma_count from the recurrence with cyclic self-intersections."""
        out = [self.walls[0].boundary_class, self.walls[1].boundary_class]
        k = 2
        while len(out) < count:
            out.append(-out[k - 2] - out[k - 1] * self.selfint(k))
            k += 1
        return out[:count]

    def specialize(self) -> "ScatteringDiagram":
        if self.coeff_mode == "specialized":
            return self
        return replace(self, walls=tuple(w.specialize() for w in self.walls), coeff_mode="specialized")

    def without_wall(self, i: int) -> "ScatteringDiagram":
        return replace(self, walls=self.walls[: i - 1] + self.walls[i:])

    def with_multiplicity(self, i: int, d: int) -> "ScatteringDiagram":
        walls = list(self.walls)
        walls[i - 1] = walls[i - 1].with_multiplicity(d)
        return replace(self, walls=tuple(walls))
