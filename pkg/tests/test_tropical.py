from fractions import Fraction

import pytest

from scatkit.models import E1, E2, LatticeVector, UnimodularMap, Wall
from scatkit.pipeline.cases import CaseId, build_case
from scatkit.pipeline.tropical import (
    PLMap,
    chart_shear,
    cone_containment_check,
    refined_fan,
    shear_matrix,
    trop_loop_check,
    trop_loop_stages,
    trop_wall_crossing,
    valuation_direction,
)

V = LatticeVector


def test_shear_fixes_the_wall_ray():
    for gamma in (E2, V(1, 1), V(2, 3), V(-1, 2)):
        for d in (1, 2, 3):
            s = shear_matrix(gamma, d)
            assert s.det == 1
            assert s @ V(gamma.b, -gamma.a) == V(gamma.b, -gamma.a)


@pytest.mark.parametrize("gamma", [E1, E2, V(1, 1), V(2, 3)])
def test_wall_shadow_is_continuous(gamma):
    assert trop_wall_crossing(Wall.simple(gamma, 2)).is_continuous()


def test_a2_wall_shadow_branches():
    shadow = trop_wall_crossing(Wall.simple(E2))
    # v(e2) >= 0: identity
    assert shadow.apply(V(3, 1)) == V(3, 1)
    assert shadow.apply(V(-4, 0)) == V(-4, 0)
    # v(e2) < 0: (x, y) -> (x + y, y)
    assert shadow.apply(V(2, -1)) == V(1, -1)
    assert shadow.apply(V(0, -3)) == V(-3, -3)


def test_inverse_undoes_the_map():
    shadow = trop_wall_crossing(Wall.simple(V(1, 2), 3))
    inverse = shadow.inverse()
    for v in (V(1, 0), V(0, 1), V(-1, 0), V(0, -1), V(3, -2), V(-5, 7), V(2, -1)):
        assert inverse.apply(shadow.apply(v)) == v


def test_linear_plmap():
    m = UnimodularMap.from_rows((0, 1), (-1, 1))
    assert PLMap.linear(m).apply(V(2, 5)) == m @ V(2, 5)
    assert PLMap.linear(m).is_continuous()


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_a2_chart_shears(i, a2):
    assert chart_shear(a2, i, "current") == UnimodularMap.from_rows((1, -1), (0, 1))
    assert chart_shear(a2, i, "next") == UnimodularMap.from_rows((1, 0), (1, 1))


def test_b2_chart_shear_uses_multiplicity(b2):
    assert chart_shear(b2, 1, "current") == UnimodularMap.from_rows((1, -2), (0, 1))
    assert chart_shear(b2, 1, "next") == UnimodularMap.from_rows((1, 0), (2, 1))


@pytest.mark.parametrize("case", list(CaseId))
def test_tropical_loop_is_identity(case):
    result = trop_loop_check(build_case(case))
    assert result.passed, result.witnesses


@pytest.mark.parametrize("case", list(CaseId))
def test_tropical_loop_detects_missing_wall(case):
    assert not trop_loop_check(build_case(case), drop=2).passed


def test_fan_contains_axes_and_is_sorted(a2):
    fan = refined_fan(trop_loop_stages(a2))
    assert fan[0] == E1
    for v in (E1, E2, -E1, -E2):
        assert v in fan


def test_valuation_directions():
    assert valuation_direction(Fraction(0)) == V(-2, 1)
    assert valuation_direction(Fraction(1)) == V(1, 0)
    assert valuation_direction(Fraction(6, 5)) == V(2, -1)


def test_cone_containment():
    result = cone_containment_check(CaseId.II)
    assert result.passed, result.witnesses
    assert len(result.witnesses) == 5


def test_cone_containment_detector():
    assert not cone_containment_check(CaseId.II, multiplicity=2).passed


def test_cone_containment_only_for_a2():
    with pytest.raises(ValueError):
        cone_containment_check(CaseId.III)
