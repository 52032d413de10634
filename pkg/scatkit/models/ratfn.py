"""Rational functions kept as unreduced numerator/denominator pairs."""
from typing import Iterable, Optional, Union

from scatkit.errors import ZeroToNegativePowerError
from scatkit.models.lattice import UnimodularMap
from scatkit.models.laurent import LaurentPoly


class RatFn:
    """num / den with den != 0; equality is by cross-multiplication."""

    __slots__ = ("num", "den")
    __hash__ = None

    def __init__(self, num: Union[LaurentPoly, int], den: Union[LaurentPoly, int] = 1):
        num = LaurentPoly._coerce(num)
        den = LaurentPoly._coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("RatFn with zero denominator")
        self.num = num
        self.den = den

    @classmethod
    def _coerce(cls, other) -> "RatFn":
        if isinstance(other, RatFn):
            return other
        if isinstance(other, (LaurentPoly, int)):
            return cls(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def equals(self, other: "RatFn") -> bool:
        return self.num * other.den == other.num * self.den

    def __eq__(self, other) -> bool:
        other = RatFn._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.equals(other)

    def __add__(self, other):
        other = RatFn._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFn(self.num + other.num, self.den)
        return RatFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFn":
        return RatFn(-self.num, self.den)

    def __sub__(self, other):
        other = RatFn._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = RatFn._coerce(other)
        if other is NotImplemented:
            return other
        return RatFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RatFn._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFn(self.num * other.den, self.den * other.num)

    def __pow__(self, k: int) -> "RatFn":
        if k >= 0:
            return RatFn(self.num ** k, self.den ** k)
        if self.is_zero():
            raise ZeroToNegativePowerError("zero raised to a negative power")
        return RatFn(self.den ** -k, self.num ** -k)

    def specialize(self, names: Optional[Iterable[str]] = None) -> "RatFn":
        names = None if names is None else tuple(names)
        return RatFn(self.num.specialize(names), self.den.specialize(names))

    def map_lattice(self, mat: UnimodularMap) -> "RatFn":
        return RatFn(self.num.map_lattice(mat), self.den.map_lattice(mat))

    def reduced(self, hints: Iterable[LaurentPoly] = ()) -> "RatFn":
        """Cancel hinted common factors, absorb a unit denominator, divide out when exact."""
        num, den = self.num, self.den
        for h in hints:
            if h.unit_inverse() is not None:
                continue
            while True:
                q_den = den.exact_div(h)
                if q_den is None:
                    break
                q_num = num.exact_div(h)
                if q_num is None:
                    break
                num, den = q_num, q_den
        inv = den.unit_inverse()
        if inv is not None:
            return RatFn(num * inv)
        quotient = num.exact_div(den)
        if quotient is not None:
            return RatFn(quotient)
        return RatFn(num, den)

    def as_poly(self) -> Optional[LaurentPoly]:
        """The Laurent polynomial this function equals, if any."""
        inv = self.den.unit_inverse()
        if inv is not None:
            return self.num * inv
        return self.num.exact_div(self.den)

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"RatFn({self})"


def rf_pow(f: RatFn, k: int) -> RatFn:
    return f ** k


def rf_eq(f: RatFn, g: RatFn) -> bool:
    return f.equals(g)
