"""Closed-form central charges c_k u^p and the BPS ray angles they determine."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from scatkit.config import settings


@dataclass(frozen=True)
class ChargeConstant:
    """modulus * e^{i pi phase}, the phase kept exact."""

    modulus: float
    phase: Fraction

    def value(self) -> complex:
        return complex(self.modulus * np.exp(1j * np.pi * float(self.phase)))


@dataclass(frozen=True)
class CentralChargeModel:
    """Z_{gamma_k}(u) = c_k u^p; c_1..c_s are given and c_{k+s} = c_k e^{2 pi i p}."""

    case: str
    exponent: Fraction
    base: tuple[ChargeConstant, ...]
    count: int

    def constant(self, k: int) -> ChargeConstant:
        if k < 1:
            raise ValueError("charge index starts at 1")
        s = len(self.base)
        q, r = divmod(k - 1, s)
        c = self.base[r]
        phase = (c.phase + 2 * self.exponent * q) % 2
        return ChargeConstant(c.modulus, phase)

    def c(self, k: int) -> complex:
        return self.constant(k).value()


_INV_SQRT3 = 1 / np.sqrt(3.0)

CHARGE_MODELS = {
    "II": CentralChargeModel("II", Fraction(5, 6), (ChargeConstant(1.0, Fraction(0)),), 5),
    "III": CentralChargeModel(
        "III",
        Fraction(3, 4),
        (ChargeConstant(1.0, Fraction(0)), ChargeConstant(float(np.sqrt(0.5)), Fraction(-1, 4))),
        6,
    ),
    "IV": CentralChargeModel(
        "IV",
        Fraction(2, 3),
        (
            ChargeConstant(1.0, Fraction(0)),
            ChargeConstant(float(_INV_SQRT3), Fraction(-1, 6)),
            ChargeConstant(1.0, Fraction(-1, 3)),
            ChargeConstant(float(_INV_SQRT3), Fraction(-1, 2)),
        ),
        8,
    ),
}


def central_charge(case: str, k: int, u: complex) -> complex:
    """c_k u^p on the branch with Arg u in [0, 2 pi)."""
    if u == 0:
        raise ValueError("central charge is undefined at u = 0")
    model = CHARGE_MODELS[case]
    arg = float(np.angle(u)) % (2 * np.pi)
    p = float(model.exponent)
    return model.c(k) * complex(abs(u) ** p * np.exp(1j * p * arg))


def ray_angle_exact(case: str, k: int) -> Fraction:
    """Smallest theta >= 0 (in units of pi) with Z_{gamma_k}(e^{i theta}) > 0."""
    model = CHARGE_MODELS[case]
    p = model.exponent
    return (-model.constant(k).phase / p) % (2 / p)


def ray_angle(case: str, k: int) -> float:
    return float(ray_angle_exact(case, k)) * np.pi


def angle_gaps(case: str) -> list[float]:
    """Consecutive differences of the sorted ray angles, wrapping once around."""
    n = CHARGE_MODELS[case].count
    angles = sorted(ray_angle(case, k) for k in range(1, n + 1))
    gaps = [b - a for a, b in zip(angles, angles[1:])]
    gaps.append(2 * np.pi - angles[-1] + angles[0])
    return gaps


def angle_gaps_check(case: str, tolerance: Optional[float] = None) -> tuple[bool, list[float]]:
    tol = settings.angle_tolerance if tolerance is None else tolerance
    n = CHARGE_MODELS[case].count
    gaps = angle_gaps(case)
    return all(abs(g - 2 * np.pi / n) <= tol for g in gaps), gaps


def charge_additivity_check(case: str, tolerance: Optional[float] = None) -> bool:
    """II: c_{k+2} = -c_k + c_{k+1} for every k; III, IV: c_3 = c_2 + c_4."""
    tol = settings.charge_tolerance if tolerance is None else tolerance
    model = CHARGE_MODELS[case]
    if case == "II":
        return all(abs(model.c(k + 2) - (model.c(k + 1) - model.c(k))) <= tol for k in range(1, model.count + 1))
    return abs(model.c(3) - (model.c(2) + model.c(4))) <= tol
