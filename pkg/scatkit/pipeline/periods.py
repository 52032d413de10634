"""Numeric period oracle for the curve y^2 = x^3 + u.

The inner integral runs along the straight segment between two ramification
points; the substitution s = sin^2 t removes both inverse-square-root endpoint
singularities. The outer integral over u uses u = u0 w^6, which absorbs the
u^{-1/6} blow-up at the origin.
"""
import logging
from functools import lru_cache
from typing import Callable, Optional, Sequence

import numpy as np

from scatkit.config import settings
from scatkit.errors import QuadratureError

logger = logging.getLogger(__name__)


@lru_cache(maxsize=8)
def _legendre(grid: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(grid)


def _nodes(grid: int, a: float, b: float) -> tuple[np.ndarray, np.ndarray]:
    x, w = _legendre(grid)
    half = 0.5 * (b - a)
    return a + half * (x + 1.0), half * w


def integrate_unit_square(f: Callable[[np.ndarray, np.ndarray], np.ndarray], grid: int = 64) -> float:
    """Tensor Gauss-Legendre rule on [0, 1]^2."""
    x, w = _nodes(grid, 0.0, 1.0)
    xx, yy = np.meshgrid(x, x, indexing="ij")
    return float(np.sum(np.outer(w, w) * f(xx, yy)))


def ramification_points(u: complex) -> np.ndarray:
    """Roots of x^3 + u sorted by argument in [0, 2 pi)."""
    roots = np.roots([1.0, 0.0, 0.0, u])
    return roots[np.argsort(np.mod(np.angle(roots), 2 * np.pi))]


def inner_period(u: complex, grid: int, pair_index: tuple[int, int] = (0, 1)) -> complex:
    """Integral of dx / sqrt(x^3 + u) from one ramification point to another."""
    roots = ramification_points(u)
    i, j = pair_index
    r_start, r_end = roots[i], roots[j]
    r_other = roots[3 - i - j]
    delta = r_end - r_start
    t, w = _nodes(grid, 0.0, np.pi / 2)
    x = r_start + np.sin(t) ** 2 * delta
    root = np.sqrt(-(delta ** 2) * (x - r_other))
    # keep one branch along the segment
    flips = np.real(root[1:] * np.conj(root[:-1])) < 0
    signs = np.concatenate(([1.0], np.where(np.cumsum(flips) % 2 == 1, -1.0, 1.0)))
    return complex(np.sum(w * 2.0 * delta / (root * signs)))


def period(u0: float, grid: int) -> complex:
    """Z(u0): the inner period integrated over u from 0 to u0."""
    w_nodes, w_weights = _nodes(grid, 0.0, 1.0)
    total = 0j
    for w, weight in zip(w_nodes, w_weights):
        u = u0 * w ** 6
        total += weight * 6.0 * u0 * w ** 5 * inner_period(u, grid)
    return total


def period_exponent_estimate(
    u0_list: Optional[Sequence[float]] = None,
    grid: Optional[int] = None,
    tolerance: Optional[float] = None,
) -> float:
    """Log-log slope of |Z(u0)| against u0; close to 5/6."""
    u0s = tuple(settings.period_u0 if u0_list is None else u0_list)
    grid = settings.period_grid if grid is None else grid
    tol = settings.quadrature_tolerance if tolerance is None else tolerance
    if grid < 1000:
        raise ValueError("period grid must be at least 1000 nodes")
    if any(not (0 < u <= 0.5) for u in u0s):
        raise ValueError("u0 values must lie in (0, 0.5]")
    mags = []
    for u0 in u0s:
        coarse = period(u0, grid)
        fine = period(u0, 2 * grid)
        err = abs(fine - coarse) / max(abs(fine), 1e-300)
        logger.debug("u0=%g |Z|=%.12g rel. change %.3g", u0, abs(fine), err)
        if err > tol:
            raise QuadratureError(f"quadrature at u0={u0} changed by {err:.3g} between {grid} and {2 * grid} nodes")
        mags.append(abs(fine))
    slope = np.polyfit(np.log(u0s), np.log(mags), 1)[0]
    return float(slope)
