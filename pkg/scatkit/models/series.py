"""Truncated power series in one variable with exact rational coefficients."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Union

from sympy import QQ
from sympy.polys.ring_series import rs_exp, rs_log, rs_mul, rs_trunc
from sympy.polys.rings import ring

from scatkit.errors import NotExactError, SeriesDomainError
from scatkit.models.coeffs import ONE, CoeffMonomial
from scatkit.models.lattice import LatticeVector
from scatkit.models.laurent import LaurentPoly

Invariants = Union[Callable[[int], Fraction], Mapping[int, Fraction]]

_RING, _X = ring("x", QQ)


@dataclass(frozen=True)
class RationalSeries:
    """c_0 + c_1 x + ... + c_N x^N, everything above x^N discarded."""

    coeffs: tuple[Fraction, ...]

    @classmethod
    def from_list(cls, values, order: int) -> "RationalSeries":
        vals = [Fraction(v) for v in values][: order + 1]
        vals += [Fraction(0)] * (order + 1 - len(vals))
        return cls(tuple(vals))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, d: int) -> Fraction:
        return self.coeffs[d] if 0 <= d <= self.order else Fraction(0)

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        n = min(self.order, other.order)
        return RationalSeries._from_ring(rs_trunc(self._to_ring() + other._to_ring(), _X, n + 1), n)

    def __mul__(self, other: "RationalSeries") -> "RationalSeries":
        n = min(self.order, other.order)
        return RationalSeries._from_ring(rs_mul(self._to_ring(), other._to_ring(), _X, n + 1), n)

    def _to_ring(self):
        return _RING.from_dict({(d,): QQ(c.numerator, c.denominator) for d, c in enumerate(self.coeffs) if c})

    @staticmethod
    def _from_ring(poly, order: int) -> "RationalSeries":
        vals = [Fraction(0)] * (order + 1)
        for (d,), c in poly.items():
            if d <= order:
                q = QQ.to_sympy(c)
                vals[d] = Fraction(int(q.p), int(q.q))
        return RationalSeries(tuple(vals))

    def exp(self) -> "RationalSeries":
        if self[0] != 0:
            raise SeriesDomainError("exp needs a series without constant term")
        if not any(self.coeffs):
            return RationalSeries.from_list([1], self.order)
        return self._from_ring(rs_exp(self._to_ring(), _X, self.order + 1), self.order)

    def log(self) -> "RationalSeries":
        if self[0] != 1:
            raise SeriesDomainError("log needs a series with constant term 1")
        if not any(self.coeffs[1:]):
            return RationalSeries.from_list([], self.order)
        return self._from_ring(rs_log(self._to_ring(), _X, self.order + 1), self.order)

    def to_laurent(self, gamma: LatticeVector, coeff: CoeffMonomial = ONE) -> LaurentPoly:
        """Substitute x = coeff * z^gamma; every coefficient must be an integer."""
        out = LaurentPoly()
        for d, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise NotExactError(f"non-integral coefficient {c} at x^{d}")
            if c:
                out = out + LaurentPoly.monomial(gamma * d, coeff ** d, int(c))
        return out

    def __str__(self) -> str:
        terms = [f"{c}*x^{d}" if d else str(c) for d, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) or "0"


def series_exp(s: RationalSeries) -> RationalSeries:
    return s.exp()


def series_log(s: RationalSeries) -> RationalSeries:
    return s.log()


def multiple_cover(d: int) -> Fraction:
    """Contribution (-1)^(d-1)/d^2 of degree-d covers of a disc."""
    return Fraction((-1) ** (d - 1), d * d)


def wall_function_from_invariants(omega: Invariants, d_max: int) -> RationalSeries:
    """exp(sum_d d * omega(d) x^d), truncated at x^d_max."""
    if d_max < 1:
        raise ValueError("d_max must be >= 1")
    lookup = omega if callable(omega) else (lambda d: omega.get(d, Fraction(0)))
    log_f = RationalSeries.from_list([0] + [d * Fraction(lookup(d)) for d in range(1, d_max + 1)], d_max)
    return log_f.exp()
