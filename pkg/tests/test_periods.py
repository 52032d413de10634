import numpy as np
import pytest

from scatkit.errors import QuadratureError
from scatkit.pipeline.periods import (
    inner_period,
    integrate_unit_square,
    period,
    period_exponent_estimate,
    ramification_points,
)


def test_unit_square_quadrature():
    assert integrate_unit_square(lambda x, y: x * y, 16) == pytest.approx(0.25, abs=1e-12)
    assert integrate_unit_square(lambda x, y: np.exp(x + y), 32) == pytest.approx((np.e - 1) ** 2, rel=1e-12)


def test_ramification_points_are_cube_roots():
    roots = ramification_points(8.0)
    assert len(roots) == 3
    assert np.allclose(np.abs(roots), 2.0)
    assert np.allclose(roots ** 3, -8.0)
    angles = np.mod(np.angle(roots), 2 * np.pi)
    assert list(angles) == sorted(angles)


def test_inner_period_scaling():
    a = abs(inner_period(0.5, 200))
    b = abs(inner_period(1.0, 200))
    assert a / b == pytest.approx(0.5 ** (-1 / 6), rel=1e-8)


def test_period_grows_like_five_sixths_power():
    ratio = abs(period(0.08, 200)) / abs(period(0.01, 200))
    assert ratio == pytest.approx(8 ** (5 / 6), rel=1e-6)


@pytest.mark.slow
def test_exponent_estimate():
    slope = period_exponent_estimate((0.01, 0.02, 0.04, 0.08), 1000, 1e-6)
    assert 0.81 <= slope <= 0.86


def test_grid_too_small():
    with pytest.raises(ValueError):
        period_exponent_estimate((0.01, 0.02), 100)


def test_u0_out_of_range():
    with pytest.raises(ValueError):
        period_exponent_estimate((0.01, 0.9), 1000)


def test_quadrature_error_is_a_value_error():
    assert issubclass(QuadratureError, ValueError)
