"""A wall of the scattering diagram."""
from dataclasses import dataclass, replace
from fractions import Fraction

from scatkit.models.coeffs import ONE, CoeffMonomial
from scatkit.models.lattice import LatticeVector
from scatkit.models.laurent import LaurentPoly


@dataclass(frozen=True)
class Wall:
    """Ray with boundary class gamma and wall function prod_j (1 + c_j z^gamma).

    The multiplicity is the number of factors. `kink` multiplies the wall
    function in the crossing (z^{[D_i]} on coefficiented diagrams); `angle`
    is the ray direction as a multiple of pi.
    """

    boundary_class: LatticeVector
    coeffs: tuple[CoeffMonomial, ...] = (ONE,)
    angle: Fraction = Fraction(0)
    kink: CoeffMonomial = ONE
    label: str = ""

    @classmethod
    def simple(
        cls,
        gamma: LatticeVector,
        d: int = 1,
        coeff: CoeffMonomial = ONE,
        angle: Fraction = Fraction(0),
        label: str = "",
    ) -> "Wall":
        if d < 1:
            raise ValueError("wall multiplicity must be positive")
        return cls(gamma, (coeff,) * d, Fraction(angle), ONE, label)

    @property
    def multiplicity(self) -> int:
        return len(self.coeffs)

    def factors(self) -> list[LaurentPoly]:
        """Distinct factors 1 + c z^gamma of the wall function."""
        out: list[LaurentPoly] = []
        for c in self.coeffs:
            f = LaurentPoly.constant(1) + LaurentPoly.monomial(self.boundary_class, c)
            if f not in out:
                out.append(f)
        return out

    def function(self) -> LaurentPoly:
        f = LaurentPoly.constant(1)
        for c in self.coeffs:
            f = f * (LaurentPoly.constant(1) + LaurentPoly.monomial(self.boundary_class, c))
        return f

    def specialize(self) -> "Wall":
        return replace(self, coeffs=(ONE,) * self.multiplicity, kink=ONE)

    def with_multiplicity(self, d: int) -> "Wall":
        """Same ray with d specialized factors."""
        return replace(self, coeffs=(ONE,) * d, kink=ONE)

    def describe_function(self) -> str:
        factors = [f"(1 + {LaurentPoly.monomial(self.boundary_class, c)})" for c in self.coeffs]
        if len(set(factors)) == 1 and len(factors) > 1:
            return f"{factors[0]}^{len(factors)}"
        return "".join(factors)
