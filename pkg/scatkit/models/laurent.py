"""Integer Laurent polynomials over the lattice with coefficient monomials."""
from types import MappingProxyType
from typing import Iterable, Mapping, Optional, Union

from scatkit.errors import NotExactError
from scatkit.models.coeffs import ONE, CoeffMonomial
from scatkit.models.lattice import ZERO, LatticeVector, UnimodularMap

Key = tuple[LatticeVector, CoeffMonomial]


class LaurentPoly:
    """Finite sum of k * c * z^m; zero coefficients are never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Key, int]] = None):
        self._terms = {key: k for key, k in (terms or {}).items() if k != 0}

    @classmethod
    def monomial(cls, m: LatticeVector, coeff: CoeffMonomial = ONE, k: int = 1) -> "LaurentPoly":
        return cls({(m, coeff): k})

    @classmethod
    def constant(cls, k: int = 1, coeff: CoeffMonomial = ONE) -> "LaurentPoly":
        return cls({(ZERO, coeff): k})

    @classmethod
    def _coerce(cls, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return cls.constant(other)
        return NotImplemented

    @property
    def terms(self) -> Mapping[Key, int]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(ZERO, ONE): 1}

    def single_term(self) -> Optional[tuple[Key, int]]:
        if len(self._terms) != 1:
            return None
        return next(iter(self._terms.items()))

    def __eq__(self, other) -> bool:
        other = LaurentPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        other = LaurentPoly._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for key, k in other._terms.items():
            out[key] = out.get(key, 0) + k
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({key: -k for key, k in self._terms.items()})

    def __sub__(self, other):
        other = LaurentPoly._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = LaurentPoly._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Key, int] = {}
        for (m1, c1), k1 in self._terms.items():
            for (m2, c2), k2 in other._terms.items():
                key = (m1 + m2, c1 * c2)
                out[key] = out.get(key, 0) + k1 * k2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            inv = self.unit_inverse()
            if inv is None:
                raise NotExactError(f"{self} is not a unit")
            return inv ** -n
        result = LaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def unit_inverse(self) -> Optional["LaurentPoly"]:
        """Inverse of a monomial with coefficient +-1, else None."""
        single = self.single_term()
        if single is None:
            return None
        (m, c), k = single
        if k not in (1, -1):
            return None
        return LaurentPoly.monomial(-m, c ** -1, k)

    def specialize(self, names: Optional[Iterable[str]] = None) -> "LaurentPoly":
        """Collapse coefficient monomials (all generators by default) to 1."""
        names = None if names is None else tuple(names)
        out: dict[Key, int] = {}
        for (m, c), k in self._terms.items():
            key = (m, c.specialize(names))
            out[key] = out.get(key, 0) + k
        return LaurentPoly(out)

    def map_lattice(self, mat: UnimodularMap) -> "LaurentPoly":
        """z^m -> z^{mat m}."""
        return LaurentPoly({(mat @ m, c): k for (m, c), k in self._terms.items()})

    def exact_div(self, other: "LaurentPoly") -> Optional["LaurentPoly"]:
        """Quotient q with self = q * other, or None when other does not divide self.

        Leading terms are taken in lex order on (a, b, coefficient exponents);
        every quotient key must lie in the Newton box allowed by both operands,
        which bounds the number of steps.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly()
        inv = other.unit_inverse()
        if inv is not None:
            return self * inv

        gens = sorted({g for p in (self, other) for (_, c) in p._terms for g in c.generators})

        def vec(key: Key) -> tuple[int, ...]:
            m, c = key
            exps = c.as_dict()
            return (m.a, m.b) + tuple(exps.get(g, 0) for g in gens)

        def unvec(v: tuple[int, ...]) -> Key:
            return LatticeVector(v[0], v[1]), CoeffMonomial.from_mapping(dict(zip(gens, v[2:])))

        num = {vec(key): k for key, k in self._terms.items()}
        den = {vec(key): k for key, k in other._terms.items()}
        dims = len(gens) + 2
        lo = [min(v[j] for v in num) - min(v[j] for v in den) for j in range(dims)]
        hi = [max(v[j] for v in num) - max(v[j] for v in den) for j in range(dims)]
        if any(l > h for l, h in zip(lo, hi)):
            return None
        lead_d = max(den)
        coef_d = den[lead_d]

        quotient: dict[tuple[int, ...], int] = {}
        rem = dict(num)
        while rem:
            lead_r = max(rem)
            coef_r = rem[lead_r]
            if coef_r % coef_d:
                return None
            qkey = tuple(x - y for x, y in zip(lead_r, lead_d))
            if any(not (l <= x <= h) for x, l, h in zip(qkey, lo, hi)):
                return None
            qcoef = coef_r // coef_d
            quotient[qkey] = qcoef
            for dkey, dk in den.items():
                key = tuple(x + y for x, y in zip(qkey, dkey))
                val = rem.get(key, 0) - qcoef * dk
                if val:
                    rem[key] = val
                else:
                    rem.pop(key, None)
        return LaurentPoly({unvec(v): k for v, k in quotient.items()})

    def sorted_terms(self) -> list[tuple[Key, int]]:
        return sorted(self._terms.items(), key=lambda item: (item[0][0], str(item[0][1])))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for (m, c), k in self.sorted_terms():
            factors = []
            if not c.is_one:
                factors.append(str(c))
            if not m.is_zero():
                factors.append(f"z^{{{m}}}")
            body = "*".join(factors)
            mag = abs(k)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if not out:
                out.append(text if k > 0 else f"-{text}")
            else:
                out.append(f"+ {text}" if k > 0 else f"- {text}")
        return " ".join(out)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


def lp_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def lp_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def lp_neg(p: LaurentPoly) -> LaurentPoly:
    return -p


def z(m: LatticeVector, coeff: CoeffMonomial = ONE) -> LaurentPoly:
    """Shorthand for the monomial coeff * z^m."""
    return LaurentPoly.monomial(m, coeff)
