"""Formal curve-class monomials z^{[C]} carried as coefficients."""
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional


@dataclass(frozen=True)
class CoeffMonomial:
    """Product of named generators such as "[D_1]" or "[E_2]" with integer exponents.

    Exponents form a free abelian group so kinks and PL-function values can be
    divided; wall data and verified relations only ever use effective monomials.
    """

    exponents: tuple[tuple[str, int], ...] = ()

    @classmethod
    def from_mapping(cls, exps: Mapping[str, int]) -> "CoeffMonomial":
        return cls(tuple(sorted((g, k) for g, k in exps.items() if k != 0)))

    @classmethod
    def gen(cls, name: str, power: int = 1) -> "CoeffMonomial":
        return cls.from_mapping({name: power})

    def as_dict(self) -> dict[str, int]:
        return dict(self.exponents)

    @property
    def generators(self) -> tuple[str, ...]:
        return tuple(g for g, _ in self.exponents)

    def exponent(self, name: str) -> int:
        return self.as_dict().get(name, 0)

    @property
    def is_one(self) -> bool:
        return not self.exponents

    @property
    def is_effective(self) -> bool:
        return all(k >= 0 for _, k in self.exponents)

    def __mul__(self, other: "CoeffMonomial") -> "CoeffMonomial":
        exps = self.as_dict()
        for g, k in other.exponents:
            exps[g] = exps.get(g, 0) + k
        return CoeffMonomial.from_mapping(exps)

    def __truediv__(self, other: "CoeffMonomial") -> "CoeffMonomial":
        return self * other ** -1

    def __pow__(self, n: int) -> "CoeffMonomial":
        return CoeffMonomial.from_mapping({g: k * n for g, k in self.exponents})

    def specialize(self, names: Optional[Iterable[str]] = None) -> "CoeffMonomial":
        """Set the named generators (all of them by default) to 1."""
        if names is None:
            return ONE
        drop = set(names)
        return CoeffMonomial(tuple((g, k) for g, k in self.exponents if g not in drop))

    def __str__(self) -> str:
        if self.is_one:
            return "1"
        return "*".join(g if k == 1 else f"{g}^{k}" for g, k in self.exponents)


ONE = CoeffMonomial()
