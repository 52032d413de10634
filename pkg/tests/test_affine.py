from dataclasses import replace

import pytest

from scatkit.models import ONE, CoeffMonomial, LatticeVector, RatFn, map_order
from scatkit.pipeline.affine import (
    build_bghk,
    build_pl_function,
    chart_relations_check,
    divisor_classes,
    global_monodromy,
    gluing_relations_check,
    gluing_ring_relation,
    monodromy_conjugacy_check,
    pl_section_check,
    recurrence_identity_check,
    relation_in_theta_lattice,
)
from scatkit.pipeline.cases import CASES, CaseId, build_case
from scatkit.pipeline.theta import theta_table

V = LatticeVector


def test_dp5_rays():
    s = build_bghk([-1] * 5)
    assert s.rays[1:6] == (V(1, 0), V(0, 1), V(-1, 1), V(-1, 0), V(0, -1))


def test_dp6_rays():
    s = build_bghk([-1, -2, -1, -2, -1, -2])
    assert s.rays[1:7] == (V(1, 0), V(0, 1), V(-1, 2), V(-1, 1), V(-1, 0), V(0, -1))


def test_too_short():
    with pytest.raises(ValueError):
        build_bghk([-1, -1])


@pytest.mark.parametrize("selfints", [[-1] * 5, [-1, -2] * 3, [-1, -3] * 4, [0, 0, 0, 0], [-2, 1, 3]])
def test_recurrence_and_charts(selfints):
    s = build_bghk(selfints)
    assert recurrence_identity_check(s)
    assert chart_relations_check(s)


@pytest.mark.parametrize("case", list(CaseId))
def test_global_monodromy_matches_case(case):
    s = build_bghk(CASES[case].selfints)
    g = global_monodromy(s)
    assert map_order(g) == CASES[case].order
    assert monodromy_conjugacy_check(s, CASES[case].monodromy)


def test_conjugacy_detects_wrong_order():
    s = build_bghk([-1] * 5)
    assert not monodromy_conjugacy_check(s, CASES[CaseId.III].monodromy)


@pytest.mark.parametrize("case", list(CaseId))
def test_pl_section(case):
    selfints = CASES[case].selfints
    s = build_bghk(selfints)
    assert pl_section_check(s, divisor_classes(len(selfints)))


def test_pl_section_linear_when_unbent():
    s = build_bghk([-1] * 5)
    phi = build_pl_function(s, [ONE] * 5)
    assert all(piece == (ONE, ONE) for piece in phi.pieces)
    assert pl_section_check(s, [ONE] * 5)


def test_pl_section_detects_perturbed_bending():
    s = build_bghk([-1] * 5)
    classes = divisor_classes(5)
    assert not pl_section_check(s, classes, bending={3: CoeffMonomial.gen("[D_3]", 2)})


def test_gluing_relation_text():
    s = build_bghk([-1] * 5)
    wall = build_case(CaseId.II, "ghk").wall(1)
    assert gluing_ring_relation(s, 1, wall).text == "X_0 X_2 = z^[D_1] (X_1 + z^[E_1])"
    toric = build_bghk([0, 0, 0, 0])
    assert gluing_ring_relation(toric, 2).text == "X_1 X_3 = z^[D_2]"


def test_gluing_relation_two_factors():
    s = build_bghk([-1, -2] * 3)
    wall = build_case(CaseId.III, "ghk").wall(2)
    text = gluing_ring_relation(s, 2, wall).text
    assert text == "X_1 X_3 = z^[D_2] (X_2 + z^[C_2^1]) (X_2 + z^[C_2^2])"


@pytest.mark.parametrize("mode", ["specialized", "ghk"])
def test_gluing_relation_is_the_theta_relation(mode):
    diagram = build_case(CaseId.II, mode)
    s = build_bghk(diagram.selfints)
    table = theta_table(diagram)
    for i in range(1, diagram.n + 1):
        rel = gluing_ring_relation(s, i, diagram.wall(i))
        rhs = relation_in_theta_lattice(rel, diagram.extended_class(i - 1), diagram.extended_class(i))
        lhs = table[i - 1].values[i - 1] * table[i + 1].values[i - 1]
        assert lhs.equals(RatFn(rhs))


@pytest.mark.parametrize("selfints", [[-1] * 5, [-1, -2] * 3, [-1, -3] * 4, [0, 0, 0, 0], [-2, 1, 3]])
def test_gluing_relations_follow_the_charts(selfints):
    assert gluing_relations_check(build_bghk(selfints))


def test_gluing_relations_detect_a_bad_ray():
    s = build_bghk([-1] * 5)
    rays = list(s.rays)
    rays[-1] = rays[-1] + rays[-2]
    assert not gluing_relations_check(replace(s, rays=tuple(rays)))
