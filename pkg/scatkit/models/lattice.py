"""Rank-2 integer lattice with its skew pairing and unimodular maps."""
from dataclasses import dataclass
from math import gcd
from typing import Optional, Union

from scatkit.errors import FactorizationMismatchError, NotUnimodularError


@dataclass(frozen=True, order=True)
class LatticeVector:
    """a*e1 + b*e2 in the fixed basis of boundary classes."""

    a: int
    b: int

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        return LatticeVector(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        return LatticeVector(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(-self.a, -self.b)

    def __mul__(self, k: int) -> "LatticeVector":
        return LatticeVector(k * self.a, k * self.b)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_primitive(self) -> bool:
        return gcd(self.a, self.b) == 1

    def dot(self, other: "LatticeVector") -> int:
        """Evaluate self, read as a linear functional, on other."""
        return self.a * other.a + self.b * other.b

    def __str__(self) -> str:
        parts = []
        for k, name in ((self.a, "e1"), (self.b, "e2")):
            if k == 0:
                continue
            sign = "-" if k < 0 else ("+" if parts else "")
            mag = "" if abs(k) == 1 else str(abs(k))
            parts.append(f"{sign}{mag}{name}")
        return "".join(parts) or "0"


E1 = LatticeVector(1, 0)
E2 = LatticeVector(0, 1)
ZERO = LatticeVector(0, 0)


def pair(u: LatticeVector, v: LatticeVector) -> int:
    """Intersection pairing <u, v> with <e1, e2> = 1."""
    return u.a * v.b - u.b * v.a


class SkewForm:
    """The fixed antisymmetric form on the lattice; calling it is the same as pair()."""

    matrix = ((0, 1), (-1, 0))

    def __call__(self, u: LatticeVector, v: LatticeVector) -> int:
        return pair(u, v)

    def __repr__(self) -> str:
        return "SkewForm(<e1,e2>=1)"


SKEW = SkewForm()


@dataclass(frozen=True)
class UnimodularMap:
    """2x2 integer matrix stored by rows; columns are the images of e1, e2."""

    rows: tuple[tuple[int, int], tuple[int, int]]

    def __post_init__(self):
        if self.det not in (1, -1):
            raise NotUnimodularError(f"determinant {self.det} for {self.rows}")

    @classmethod
    def from_rows(cls, r1: tuple[int, int], r2: tuple[int, int]) -> "UnimodularMap":
        return cls((tuple(r1), tuple(r2)))

    @classmethod
    def from_columns(cls, c1: LatticeVector, c2: LatticeVector) -> "UnimodularMap":
        return cls(((c1.a, c2.a), (c1.b, c2.b)))

    @classmethod
    def identity(cls) -> "UnimodularMap":
        return cls(((1, 0), (0, 1)))

    @property
    def det(self) -> int:
        (p, q), (r, s) = self.rows
        return p * s - q * r

    @property
    def trace(self) -> int:
        return self.rows[0][0] + self.rows[1][1]

    @property
    def columns(self) -> tuple[LatticeVector, LatticeVector]:
        (p, q), (r, s) = self.rows
        return LatticeVector(p, r), LatticeVector(q, s)

    def is_identity(self) -> bool:
        return self.rows == ((1, 0), (0, 1))

    def transpose(self) -> "UnimodularMap":
        (p, q), (r, s) = self.rows
        return UnimodularMap(((p, r), (q, s)))

    def inverse(self) -> "UnimodularMap":
        (p, q), (r, s) = self.rows
        d = self.det
        return UnimodularMap(((d * s, -d * q), (-d * r, d * p)))

    def __matmul__(
        self, other: Union["UnimodularMap", LatticeVector]
    ) -> Union["UnimodularMap", LatticeVector]:
        """Composition self after other, or application to a vector."""
        (p, q), (r, s) = self.rows
        if isinstance(other, LatticeVector):
            return LatticeVector(p * other.a + q * other.b, r * other.a + s * other.b)
        (p2, q2), (r2, s2) = other.rows
        return UnimodularMap(
            (
                (p * p2 + q * r2, p * q2 + q * s2),
                (r * p2 + s * r2, r * q2 + s * s2),
            )
        )

    def __pow__(self, n: int) -> "UnimodularMap":
        base = self if n >= 0 else self.inverse()
        result = UnimodularMap.identity()
        for _ in range(abs(n)):
            result = result @ base
        return result

    def __str__(self) -> str:
        (p, q), (r, s) = self.rows
        return f"[[{p},{q}],[{r},{s}]]"


def apply_map(m: UnimodularMap, v: LatticeVector) -> LatticeVector:
    return m @ v


def map_order(m: UnimodularMap, cap: int = 12) -> Optional[int]:
    """Smallest n <= cap with m^n = identity, or None."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    power = m
    for n in range(1, cap + 1):
        if power.is_identity():
            return n
        power = power @ m
    return None


def picard_lefschetz(gamma: LatticeVector) -> UnimodularMap:
    """v -> v + <gamma, v> gamma."""
    return UnimodularMap.from_columns(
        E1 + gamma * pair(gamma, E1),
        E2 + gamma * pair(gamma, E2),
    )


def complement(gamma: LatticeVector) -> LatticeVector:
    """Some delta with <gamma, delta> = 1; gamma must be primitive."""
    # extended Euclid on (a, b): x*a + y*b = 1, then <gamma, (-y, x)> = a*x + b*y
    old_r, r = gamma.a, gamma.b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    if old_r != 1:
        raise ValueError(f"{gamma} is not primitive")
    return LatticeVector(-old_t, old_s)


def factor_monodromy(m: UnimodularMap, d2: int) -> tuple[UnimodularMap, UnimodularMap]:
    """Split m as PL(e1) after PL(e2)^d2."""
    if d2 not in (1, 2, 3):
        raise ValueError("d2 must be 1, 2 or 3")
    m1 = picard_lefschetz(E1)
    m2 = picard_lefschetz(E2) ** d2
    product = m1 @ m2
    if product != m:
        raise FactorizationMismatchError(f"PL(e1)PL(e2)^{d2} = {product}, expected {m}")
    return m1, m2
