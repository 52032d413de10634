import random

import pytest

from scatkit.errors import FactorizationMismatchError, NotUnimodularError
from scatkit.models import (
    E1,
    E2,
    SKEW,
    ZERO,
    LatticeVector,
    UnimodularMap,
    factor_monodromy,
    map_order,
    pair,
    picard_lefschetz,
)
from scatkit.models.lattice import complement
from scatkit.pipeline.cases import CASES, CaseId


def test_vector_text():
    assert str(LatticeVector(1, 2)) == "e1+2e2"
    assert str(-E1) == "-e1"
    assert str(LatticeVector(2, -3)) == "2e1-3e2"
    assert str(ZERO) == "0"


def test_pairing_is_antisymmetric():
    assert pair(E1, E2) == 1
    assert pair(E2, E1) == -1
    assert SKEW(E1 + E2, E1) == -1
    assert pair(LatticeVector(3, 5), LatticeVector(3, 5)) == 0


def test_primitive():
    assert LatticeVector(2, 3).is_primitive()
    assert not LatticeVector(2, 4).is_primitive()
    assert not ZERO.is_primitive()


def test_non_unimodular_rejected():
    with pytest.raises(NotUnimodularError):
        UnimodularMap.from_rows((1, 1), (0, 2))
    with pytest.raises(ValueError):
        UnimodularMap.from_rows((0, 0), (0, 0))


def test_map_algebra():
    m = UnimodularMap.from_rows((2, 1), (1, 1))
    assert (m @ m.inverse()).is_identity()
    assert m ** -2 == (m.inverse() @ m.inverse())
    assert m @ E1 == LatticeVector(2, 1)
    assert m.columns == (LatticeVector(2, 1), LatticeVector(1, 1))
    assert str(m.transpose()) == "[[2,1],[1,1]]"


def test_picard_lefschetz_fixes_its_cycle():
    for gamma in (E1, E2, LatticeVector(2, 3), LatticeVector(-1, 4)):
        pl = picard_lefschetz(gamma)
        assert pl @ gamma == gamma
        assert pl.det == 1
        assert pl.trace == 2
    assert picard_lefschetz(E1) == UnimodularMap.from_rows((1, 1), (0, 1))
    assert picard_lefschetz(E2) == UnimodularMap.from_rows((1, 0), (-1, 1))


@pytest.mark.parametrize("case", list(CaseId))
def test_case_monodromy_factors(case):
    data = CASES[case]
    m1, m2 = factor_monodromy(data.monodromy, data.d2)
    assert m1 @ m2 == data.monodromy
    assert map_order(data.monodromy) == data.order


def test_monodromy_orders():
    assert [map_order(CASES[c].monodromy) for c in CaseId] == [6, 4, 3]


def test_factorization_mismatch():
    with pytest.raises(FactorizationMismatchError):
        factor_monodromy(UnimodularMap.identity(), 1)
    with pytest.raises(ValueError):
        factor_monodromy(CASES[CaseId.II].monodromy, 4)


def test_shear_has_infinite_order():
    assert map_order(picard_lefschetz(E1)) is None
    assert map_order(UnimodularMap.identity()) == 1


@pytest.mark.parametrize("gamma", [E1, -E2, LatticeVector(2, 3), LatticeVector(-5, 7), LatticeVector(4, -1)])
def test_complement_pairs_to_one(gamma):
    assert pair(gamma, complement(gamma)) == 1


def test_complement_needs_primitive():
    with pytest.raises(ValueError):
        complement(LatticeVector(2, 4))


def _random_vector(rng: random.Random) -> LatticeVector:
    return LatticeVector(rng.randint(-20, 20), rng.randint(-20, 20))


def test_pairing_antisymmetry_sweep():
    rng = random.Random(3)
    for _ in range(200):
        u, v = _random_vector(rng), _random_vector(rng)
        assert pair(u, v) == -pair(v, u)
        assert pair(u, u) == 0
        assert SKEW(u, v) == pair(u, v)


def test_picard_lefschetz_is_unipotent():
    rng = random.Random(5)
    for _ in range(100):
        gamma = _random_vector(rng)
        pl = picard_lefschetz(gamma)
        assert pl.det == 1
        # (M - I)^2 = 0, i.e. M^2 = 2M - I
        (p, q), (r, s) = pl.rows
        assert (pl @ pl).rows == ((2 * p - 1, 2 * q), (2 * r, 2 * s - 1))
