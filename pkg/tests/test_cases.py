from fractions import Fraction

import pytest

from scatkit.errors import GhkUnavailableError
from scatkit.models import E1, E2, LatticeVector
from scatkit.pipeline.cases import CaseId, adjacency_check, build_case, recurrence_check, shift_check


@pytest.mark.parametrize("text, case", [("a2", CaseId.II), ("B2", CaseId.III), (" g2 ", CaseId.IV), ("III", CaseId.III)])
def test_parse_aliases(text, case):
    assert CaseId.parse(text) is case


def test_parse_unknown():
    with pytest.raises(ValueError):
        CaseId.parse("d4")


def test_a2_walls(a2):
    assert a2.classes == (-E1, E2, E1 + E2, E1, -E2)
    assert a2.multiplicities == (1, 1, 1, 1, 1)
    assert [w.angle for w in a2.walls] == [Fraction(0), Fraction(2, 5), Fraction(4, 5), Fraction(6, 5), Fraction(8, 5)]
    assert a2.cut_angle == Fraction(9, 5)


def test_b2_walls(b2):
    assert b2.multiplicities == (1, 2, 1, 2, 1, 2)
    angles = [w.angle for w in b2.walls]
    assert [b - a for a, b in zip(angles, angles[1:])] == [Fraction(1, 3)] * 5


def test_g2_walls(g2):
    assert g2.multiplicities == (1, 3, 1, 3, 1, 3, 1, 3)
    assert g2.classes[2] == E1 + 3 * E2
    assert g2.classes[4] == LatticeVector(2, 3)


def test_extended_classes(a2):
    assert a2.extended_class(0) == LatticeVector(-1, -1)
    assert a2.extended_class(6) == LatticeVector(-1, -1)
    assert a2.monodromy @ a2.extended_class(5) == a2.extended_class(0)
    with pytest.raises(IndexError):
        a2.extended_class(7)


@pytest.mark.parametrize("case, period", [(CaseId.II, 6), (CaseId.III, 8), (CaseId.IV, 12)])
def test_periodic_classes(case, period):
    d = build_case(case)
    seq = d.periodic_classes(2 * period)
    assert seq[:period] == seq[period:]
    assert len(set(seq[:period])) == period


@pytest.mark.parametrize("case", list(CaseId))
def test_structural_invariants(case):
    d = build_case(case)
    assert recurrence_check(d)
    assert adjacency_check(d)
    assert shift_check(d)


def test_ghk_coefficients():
    a2 = build_case(CaseId.II, "ghk")
    assert str(a2.wall(1).coeffs[0]) == "[E_1]"
    assert str(a2.wall(1).kink) == "[D_1]"
    b2 = build_case(CaseId.III, "ghk")
    assert [str(c) for c in b2.wall(2).coeffs] == ["[C_2^1]", "[C_2^2]"]
    assert b2.wall(2).multiplicity == 2


def test_ghk_unavailable_for_g2():
    with pytest.raises(GhkUnavailableError):
        build_case(CaseId.IV, "ghk")


def test_specialize_drops_coefficients():
    spec = build_case(CaseId.II, "ghk").specialize()
    assert spec.coeff_mode == "specialized"
    assert all(w.kink.is_one for w in spec.walls)
    assert spec.walls[0].function() == build_case(CaseId.II).walls[0].function()
