"""Torus automorphisms stored as words of generators."""
from dataclasses import dataclass
from typing import Union

from scatkit.models.lattice import UnimodularMap
from scatkit.models.wall import Wall


@dataclass(frozen=True)
class Cross:
    """Crossing a wall; sign +1 is counterclockwise."""

    wall: Wall
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("crossing sign must be +1 or -1")

    def inverse(self) -> "Cross":
        return Cross(self.wall, -self.sign)

    def __str__(self) -> str:
        return f"K[{self.wall.boundary_class}]{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class Twist:
    """z^m -> z^{M m}."""

    matrix: UnimodularMap

    def inverse(self) -> "Twist":
        return Twist(self.matrix.inverse())

    def __str__(self) -> str:
        return f"Twist{self.matrix}"


Generator = Union[Cross, Twist]


@dataclass(frozen=True)
class TorusAuto:
    """Generators applied left to right to the running expression."""

    word: tuple[Generator, ...] = ()

    @classmethod
    def of(cls, *gens: Generator) -> "TorusAuto":
        return cls(tuple(gens))

    def then(self, other: "TorusAuto") -> "TorusAuto":
        return TorusAuto(self.word + other.word)

    def inverse(self) -> "TorusAuto":
        return TorusAuto(tuple(g.inverse() for g in reversed(self.word)))

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return " ; ".join(str(g) for g in self.word) or "id"
