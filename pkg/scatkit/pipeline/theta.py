"""Theta functions by transporting chamber monomials across walls."""
import logging
from dataclasses import dataclass, field
from typing import Optional

from scatkit.errors import InconsistentDiagramError
from scatkit.models import LatticeVector, LaurentPoly, RatFn, ScatteringDiagram, TorusAuto, Twist, z
from scatkit.pipeline.cases import CaseId, build_case
from scatkit.pipeline.wallcross import (
    apply_auto,
    apply_generator,
    crossing_word,
    loop_consistency,
    reverse_crossing_word,
)
from scatkit.schemas import CheckResult

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Seed:
    """q = a v_{i-1} + b v_i, seeded in chamber i-1 (1 <= i <= n+1)."""

    a: int
    b: int
    i: int

    @property
    def chamber(self) -> int:
        return self.i - 1


def ray_seed(j: int) -> Seed:
    """Seed of the theta function attached to ray v_j, 0 <= j <= n+1."""
    if j == 0:
        return Seed(1, 0, 1)
    return Seed(0, 1, j)


@dataclass
class ThetaRecord:
    seed: Seed
    values: dict[int, RatFn] = field(default_factory=dict)


def seed_monomial(diagram: ScatteringDiagram, q: Seed) -> LaurentPoly:
    if q.a < 0 or q.b < 0:
        raise ValueError("seed coefficients must be nonnegative")
    if not 1 <= q.i <= diagram.n + 1:
        raise ValueError(f"seed index {q.i} outside 1..{diagram.n + 1}")
    m = -(diagram.extended_class(q.i - 1) * q.a) - diagram.extended_class(q.i) * q.b
    return z(m)


def transport_word(diagram: ScatteringDiagram, source: int, target: int) -> TorusAuto:
    """Path inside the cut plane from chamber `source` to chamber `target`."""
    if target >= source:
        return crossing_word(diagram, source + 1, target)
    return reverse_crossing_word(diagram, source, target + 1)


def transport_word_through_cut(diagram: ScatteringDiagram, source: int, target: int) -> TorusAuto:
    """The other way round: a path that crosses the cut once (or a full loop when source == target)."""
    n = diagram.n
    m = diagram.monodromy
    if target > source:
        return TorusAuto(
            reverse_crossing_word(diagram, source, 1).word
            + (Twist(m.inverse()),)
            + reverse_crossing_word(diagram, n, target + 1).word
        )
    return TorusAuto(
        crossing_word(diagram, source + 1, n).word + (Twist(m),) + crossing_word(diagram, 1, target).word
    )


def require_consistent(diagram: ScatteringDiagram) -> None:
    """Transport is path independent only when the loop closes up."""
    result = loop_consistency(diagram)
    if not result.passed:
        raise InconsistentDiagramError(
            f"loop around case {diagram.case} is not the identity: {'; '.join(result.witnesses)}"
        )


def theta(diagram: ScatteringDiagram, q: Seed, target_chamber: int) -> RatFn:
    """Seed monomial of q transported to the target chamber."""
    require_consistent(diagram)
    return apply_auto(transport_word(diagram, q.chamber, target_chamber), seed_monomial(diagram, q))


def theta_record(diagram: ScatteringDiagram, q: Seed) -> ThetaRecord:
    """Values of one theta function in every chamber 0..n, walking outward from the seed."""
    require_consistent(diagram)
    return _walk(diagram, q)


def _walk(diagram: ScatteringDiagram, q: Seed) -> ThetaRecord:
    record = ThetaRecord(q)
    start = RatFn(seed_monomial(diagram, q))
    record.values[q.chamber] = start
    expr = start
    for k in range(q.chamber + 1, diagram.n + 1):
        expr = apply_generator(crossing_word(diagram, k, k).word[0], expr)
        record.values[k] = expr
    expr = start
    for k in range(q.chamber - 1, -1, -1):
        expr = apply_generator(reverse_crossing_word(diagram, k + 1, k + 1).word[0], expr)
        record.values[k] = expr
    return record


def theta_table(diagram: ScatteringDiagram) -> dict[int, ThetaRecord]:
    """Ray theta functions theta_0 .. theta_{n+1}."""
    require_consistent(diagram)
    return {j: _walk(diagram, ray_seed(j)) for j in range(diagram.n + 2)}


def _relation_rhs(diagram: ScatteringDiagram, i: int, theta_i: RatFn) -> RatFn:
    w = diagram.wall(i)
    if diagram.coeff_mode == "ghk":
        rhs = RatFn(LaurentPoly.monomial(LatticeVector(0, 0), w.kink))
        for c in w.coeffs:
            rhs = rhs * (theta_i + RatFn(LaurentPoly.monomial(LatticeVector(0, 0), c)))
        return rhs
    return (theta_i + 1) ** w.multiplicity


def exchange_check(case: CaseId, coeff_mode: str = "specialized") -> CheckResult:
    """theta_{i-1} theta_{i+1} against the exchange right-hand side, in every chamber."""
    diagram = build_case(case, coeff_mode)
    return exchange_check_diagram(diagram)


def exchange_check_diagram(
    diagram: ScatteringDiagram, table: Optional[dict[int, ThetaRecord]] = None
) -> CheckResult:
    table = theta_table(diagram) if table is None else table
    ok = True
    witnesses = []
    for i in range(1, diagram.n + 1):
        for k in range(diagram.n + 1):
            lhs = table[i - 1].values[k] * table[i + 1].values[k]
            rhs = _relation_rhs(diagram, i, table[i].values[k])
            if not lhs.equals(rhs):
                ok = False
                witnesses.append(f"i={i} chamber={k}: {lhs.reduced()} != {rhs.reduced()}")
        witnesses.append(f"i={i}: theta_{i - 1} theta_{i + 1} = {_relation_rhs(diagram, i, table[i].values[i]).reduced()}")
    name = "exchange_relations" if diagram.coeff_mode == "specialized" else "exchange_relations_ghk"
    logger.info("exchange relations for %s (%s): %s", diagram.case, diagram.coeff_mode, ok)
    return CheckResult(name=name, passed=ok, witnesses=witnesses)


def theta_period(case: CaseId) -> int:
    """Smallest p with (theta_p, theta_{p+1}) = (x, y) under theta_{i+1} = (1 + theta_i)^{d_i} / theta_{i-1}; 0 if none up to n."""
    diagram = build_case(case)
    n = diagram.n
    mult = diagram.multiplicities
    one = LaurentPoly.constant(1)
    seq = [z(LatticeVector(1, 0)), z(LatticeVector(0, 1))]
    for i in range(2, n + 2):
        d = mult[(i - 1) % n]
        nxt = ((one + seq[i - 1]) ** d).exact_div(seq[i - 2])
        if nxt is None:
            return 0
        seq.append(nxt)
    return next((p for p in range(1, n + 1) if seq[p] == seq[0] and seq[p + 1] == seq[1]), 0)


def periodicity_check(case: CaseId) -> bool:
    """The exchange recurrence returns to its start after exactly n steps."""
    return theta_period(case) == build_case(case).n


def well_definedness_check(diagram: ScatteringDiagram) -> CheckResult:
    """Transport inside the cut plane agrees with transport through the cut."""
    flat = diagram.specialize()
    ok = True
    witnesses = []
    for j in range(flat.n + 2):
        q = ray_seed(j)
        start = RatFn(seed_monomial(flat, q))
        record = _walk(flat, q)
        for k in range(flat.n + 1):
            around = apply_auto(transport_word_through_cut(flat, q.chamber, k), start)
            if not around.equals(record.values[k]):
                ok = False
                witnesses.append(f"seed {j} chamber {k}: {record.values[k]} vs {around}")
    return CheckResult(name="theta_well_defined", passed=ok, witnesses=witnesses)


def specialization_check(case: CaseId) -> bool:
    """specialize(theta(ghk)) == theta(specialized) chamber by chamber."""
    ghk = theta_table(build_case(case, "ghk"))
    plain = theta_table(build_case(case, "specialized"))
    for j, record in ghk.items():
        for k, value in record.values.items():
            if not value.specialize().equals(plain[j].values[k]):
                return False
    return True
