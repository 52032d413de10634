"""Check engine: runs every applicable check on a case and assembles the report."""
import logging
import random
import time
from math import comb
from typing import Callable, Sequence

import numpy as np

from scatkit.config import Settings
from scatkit.models import (
    E1,
    E2,
    LatticeVector,
    RatFn,
    RationalSeries,
    ScatteringDiagram,
    UnimodularMap,
    factor_monodromy,
    map_order,
    multiple_cover,
    wall_function_from_invariants,
    z,
)
from scatkit.pipeline.affine import (
    build_bghk,
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
from scatkit.pipeline.cases import CASES, CaseId, adjacency_check, build_case, recurrence_check, shift_check
from scatkit.pipeline.charges import angle_gaps_check, charge_additivity_check
from scatkit.pipeline.periods import period_exponent_estimate
from scatkit.pipeline.theta import (
    ThetaRecord,
    exchange_check_diagram,
    periodicity_check,
    specialization_check,
    theta_period,
    theta_table,
    well_definedness_check,
)
from scatkit.pipeline.tropical import chart_shear, cone_containment_check, trop_loop_check
from scatkit.pipeline.wallcross import (
    apply_auto,
    cancellation_chain,
    cluster_form_check,
    focus_focus_check,
    focus_focus_word,
    homotopy_check,
    loop_consistency,
    mutation_check,
    pentagon_check,
)
from scatkit.schemas import CheckResult, Report, WallRow

logger = logging.getLogger(__name__)

FAMILIES = ("pentagon", "focus-focus", "consistency", "theta", "angles", "affine", "trop")
PERIOD_SLOPE_RANGE = (0.81, 0.86)


def _flag(name: str, ok: bool, witnesses: Sequence[str] = ()) -> CheckResult:
    return CheckResult(name=name, passed=bool(ok), witnesses=list(witnesses))


def wall_rows(diagram: ScatteringDiagram) -> list[WallRow]:
    rows = []
    for i, w in enumerate(diagram.walls, start=1):
        coeff = ", ".join(str(c) for c in w.coeffs)
        if not w.kink.is_one:
            coeff = f"{coeff}; kink {w.kink}"
        rows.append(
            WallRow(
                index=i,
                boundary_class=str(w.boundary_class),
                multiplicity=w.multiplicity,
                angle="0" if w.angle == 0 else f"{w.angle}*pi",
                angle_radians=round(float(w.angle) * float(np.pi), 12),
                coefficient=coeff,
                function=w.describe_function(),
            )
        )
    return rows


# --- case-level checks ------------------------------------------------------


def _check_monodromy(diagram: ScatteringDiagram) -> CheckResult:
    data = CASES[CaseId(diagram.case)]
    m1, m2 = factor_monodromy(diagram.monodromy, data.d2)
    order = map_order(diagram.monodromy)
    witnesses = [f"M = {diagram.monodromy} = {m1} {m2}", f"order {order}"]
    return _flag("monodromy_factorization", order == data.order, witnesses)


def _check_classes(diagram: ScatteringDiagram) -> CheckResult:
    ok = recurrence_check(diagram) and adjacency_check(diagram) and shift_check(diagram)
    period = diagram.n + CASES[CaseId(diagram.case)].shift
    seq = diagram.periodic_classes(period)
    return _flag("class_recurrence", ok, [" ".join(str(g) for g in seq)])


def _check_multiple_cover(diagram: ScatteringDiagram, truncation: int) -> CheckResult:
    """exp of the multiple-cover sum reproduces every wall function up to the truncation order."""
    ok = True
    witnesses = []
    for d in sorted(set(diagram.multiplicities)):
        series = wall_function_from_invariants(lambda k: d * multiple_cover(k), truncation)
        expected = RationalSeries.from_list([comb(d, k) for k in range(truncation + 1)], truncation)
        ok = ok and series == expected
        witnesses.append(f"d={d}: {series}")
    for w in diagram.specialize().walls:
        series = wall_function_from_invariants(lambda k: w.multiplicity * multiple_cover(k), truncation)
        if truncation >= w.multiplicity:
            ok = ok and series.to_laurent(w.boundary_class) == w.function()
    return _flag("multiple_cover", ok, witnesses)


def _check_wall_removal(diagram: ScatteringDiagram) -> CheckResult:
    """Dropping any single wall must break loop consistency."""
    broken = [i for i in range(1, diagram.n + 1) if not loop_consistency(diagram.without_wall(i)).passed]
    return _flag("wall_removal_detected", len(broken) == diagram.n, [f"broken without walls {broken}"])


def _check_cancellation_chain(diagram: ScatteringDiagram, bound: int) -> CheckResult:
    ok = True
    witnesses = []
    for a1 in range(-bound, bound + 1):
        for a2 in range(-bound, bound + 1):
            a = LatticeVector(a1, a2)
            chain = cancellation_chain(diagram, a)
            ok = ok and chain[-1].equals(RatFn(z(a)))
            if (a1, a2) == (1, 1):
                witnesses.extend(str(step) for step in chain)
    return _flag("cancellation_chain", ok, witnesses)


def _check_exchange(diagram: ScatteringDiagram, table: dict[int, ThetaRecord]) -> CheckResult:
    return exchange_check_diagram(diagram, table)


def _check_periodicity(diagram: ScatteringDiagram) -> CheckResult:
    case = CaseId(diagram.case)
    return _flag("theta_periodicity", periodicity_check(case), [f"period {theta_period(case)}"])


def _check_gluing(diagram: ScatteringDiagram, table: dict[int, ThetaRecord]) -> CheckResult:
    """Chart-i gluing relation agrees with theta_{i-1} theta_{i+1} read in chamber i-1."""
    structure = build_bghk(diagram.selfints)
    ok = True
    witnesses = []
    for i in range(1, diagram.n + 1):
        rel = gluing_ring_relation(structure, i, diagram.wall(i))
        rhs = RatFn(relation_in_theta_lattice(rel, diagram.extended_class(i - 1), diagram.extended_class(i)))
        lhs = table[i - 1].values[i - 1] * table[i + 1].values[i - 1]
        ok = ok and lhs.equals(rhs)
        witnesses.append(rel.text)
    return _flag("gluing_relation", ok, witnesses)


def _check_angles(case: CaseId, settings: Settings) -> list[CheckResult]:
    ok, gaps = angle_gaps_check(case.value, settings.angle_tolerance)
    return [
        _flag("angle_gaps", ok, [" ".join(f"{g:.12f}" for g in gaps)]),
        _flag("charge_additivity", charge_additivity_check(case.value, settings.charge_tolerance)),
    ]


def _check_affine(diagram: ScatteringDiagram) -> list[CheckResult]:
    structure = build_bghk(diagram.selfints)
    g = global_monodromy(structure)
    rays = " ".join(f"({v.a},{v.b})" for v in structure.rays)
    classes = divisor_classes(diagram.n)
    return [
        _flag("affine_recurrence", recurrence_identity_check(structure), [rays]),
        _flag("affine_charts", chart_relations_check(structure)),
        _flag(
            "affine_monodromy",
            monodromy_conjugacy_check(structure, diagram.monodromy),
            [f"{g} (order {map_order(g)})"],
        ),
        _flag("pl_section", pl_section_check(structure, classes)),
    ]


def _check_trop(diagram: ScatteringDiagram) -> list[CheckResult]:
    """Tropical loop, chart forms of each shear, and (case II) cone containment with its detector."""
    out = [trop_loop_check(diagram)]
    ok = True
    witnesses = []
    for i in range(1, diagram.n):
        d = diagram.wall(i + 1).multiplicity
        cur, nxt = chart_shear(diagram, i, "current"), chart_shear(diagram, i, "next")
        ok = ok and cur == UnimodularMap.from_rows((1, -d), (0, 1)) and nxt == UnimodularMap.from_rows((1, 0), (d, 1))
        witnesses.append(f"i={i}: {cur} / {nxt}")
    out.append(_flag("chart_shear", ok, witnesses))
    if diagram.case == CaseId.II.value:
        out.append(cone_containment_check(CaseId.II))
        detector = cone_containment_check(CaseId.II, multiplicity=2)
        out.append(_flag("cone_containment_detector", not detector.passed, detector.witnesses[:1]))
    return out


def _check_periods(settings: Settings) -> CheckResult:
    slope = period_exponent_estimate(settings.period_u0, settings.period_grid, settings.quadrature_tolerance)
    lo, hi = PERIOD_SLOPE_RANGE
    return _flag("period_exponent", lo <= slope <= hi, [f"slope {slope:.6f}"])


def run_checks(diagram: ScatteringDiagram, settings: Settings) -> tuple[list[CheckResult], dict[str, float]]:
    """Every check that applies to the diagram, in a fixed order."""
    case = CaseId(diagram.case)
    checks: list[CheckResult] = []
    timing: dict[str, float] = {}
    tables: dict[str, dict[int, ThetaRecord]] = {}

    def step(label: str, fn: Callable[[], object]) -> None:
        t0 = time.perf_counter()
        try:
            produced = fn()
        except ValueError as e:
            logger.warning("check %s raised: %s", label, e)
            produced = CheckResult(name=label, passed=False, detail=f"{type(e).__name__}: {e}")
        results = produced if isinstance(produced, list) else [produced]
        for r in results:
            if not r.passed:
                logger.warning("check %s failed", r.name)
        checks.extend(results)
        timing[label] = round(time.perf_counter() - t0, 6)

    def table() -> dict[int, ThetaRecord]:
        if "t" not in tables:
            tables["t"] = theta_table(diagram)
        return tables["t"]

    logger.info("running checks for case %s (%s)", case.value, diagram.coeff_mode)
    step("monodromy_factorization", lambda: _check_monodromy(diagram))
    step("class_recurrence", lambda: _check_classes(diagram))
    step("multiple_cover", lambda: _check_multiple_cover(diagram, settings.truncation))
    step("loop_consistency", lambda: loop_consistency(diagram))
    step("wall_removal_detected", lambda: _check_wall_removal(diagram.specialize()))
    step("loop_homotopy", lambda: _flag("loop_homotopy", homotopy_check(diagram)))
    step("mutation", lambda: mutation_check(diagram))
    if case is CaseId.II:
        step("cancellation_chain", lambda: _check_cancellation_chain(diagram, settings.loop_pair_bound))
    step("cluster_form", lambda: cluster_form_check(diagram))
    step("exchange_relations", lambda: _check_exchange(diagram, table()))
    step("theta_periodicity", lambda: _check_periodicity(diagram))
    step("theta_well_defined", lambda: well_definedness_check(diagram))
    if diagram.coeff_mode == "ghk":
        step("theta_specialization", lambda: _flag("theta_specialization", specialization_check(case)))
    step("gluing_relation", lambda: _check_gluing(diagram, table()))
    step("angles", lambda: _check_angles(case, settings))
    step("affine", lambda: _check_affine(diagram))
    step("trop", lambda: _check_trop(diagram))
    if settings.periods:
        step("period_exponent", lambda: _check_periods(settings))
    return checks, timing


def run_case(case: CaseId, settings: Settings) -> Report:
    """Build the case diagram in the configured coefficient mode and run every check.

    Raises GhkUnavailableError for ghk coefficients on case IV.
    """
    diagram = build_case(case, settings.coeffs)
    checks, timing = run_checks(diagram, settings)
    return Report(
        command="case",
        case=diagram.case,
        coeff_mode=diagram.coeff_mode,
        walls=wall_rows(diagram),
        checks=checks,
        timing=timing if settings.timing else None,
    )


# --- families ---------------------------------------------------------------


def random_unimodular(rng: random.Random, steps: int = 6) -> UnimodularMap:
    """Random product of elementary shears, each step +-1."""
    m = UnimodularMap.identity()
    for _ in range(steps):
        k = rng.choice((-1, 1))
        elem = UnimodularMap.from_rows((1, k), (0, 1)) if rng.random() < 0.5 else UnimodularMap.from_rows((1, 0), (k, 1))
        m = elem @ m
    return m


def _family_pentagon(settings: Settings) -> list[CheckResult]:
    rng = random.Random(settings.seed)
    ok = True
    failures = []
    for _ in range(settings.pentagon_samples):
        g = random_unimodular(rng)
        gamma, gamma_p = g @ E2, g @ E1
        if not pentagon_check(gamma, gamma_p):
            ok = False
            failures.append(f"gamma={gamma} gamma'={gamma_p}")
    witnesses = [f"{settings.pentagon_samples} samples, seed {settings.seed}"] + failures
    return [_flag("pentagon", ok, witnesses)]


def _family_focus_focus(settings: Settings) -> list[CheckResult]:
    bound = settings.focus_focus_bound
    tested = 0
    failures = []
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            v = LatticeVector(a, b)
            if v.is_zero() or not v.is_primitive():
                continue
            tested += 1
            if not focus_focus_check(v):
                failures.append(str(v))
    alpha, beta = focus_focus_word(E1), focus_focus_word(E2)
    pairs = settings.loop_pair_bound
    loops_ok = True
    for a1 in range(-pairs, pairs + 1):
        for a2 in range(-pairs, pairs + 1):
            m = LatticeVector(a1, a2)
            loops_ok = loops_ok and apply_auto(alpha, z(m)).equals(RatFn(z(LatticeVector(a1 - a2, a2))))
            loops_ok = loops_ok and apply_auto(beta, z(m)).equals(RatFn(z(LatticeVector(a1, a1 + a2))))
    return [
        _flag("focus_focus", not failures, [f"{tested} primitive classes"] + failures),
        _flag("alpha_beta_loops", loops_ok, [f"pairs in [-{pairs}, {pairs}]^2"]),
    ]


def _each_case(fn: Callable[[ScatteringDiagram], list[CheckResult]]) -> list[CheckResult]:
    out = []
    for case in CaseId:
        diagram = build_case(case)
        for r in fn(diagram):
            out.append(r.model_copy(update={"name": f"{r.name}_{case.alias.lower()}"}))
    return out


def _family_consistency(settings: Settings) -> list[CheckResult]:
    def one(d: ScatteringDiagram) -> list[CheckResult]:
        out = [
            loop_consistency(d),
            _check_wall_removal(d),
            _flag("loop_homotopy", homotopy_check(d)),
            cluster_form_check(d),
        ]
        if d.case == "II":
            out.append(_check_cancellation_chain(d, settings.loop_pair_bound))
        return out

    return _each_case(one)


def _family_theta(settings: Settings) -> list[CheckResult]:
    out = _each_case(lambda d: [exchange_check_diagram(d), _check_periodicity(d)])
    for case in (CaseId.II, CaseId.III):
        ghk = exchange_check_diagram(build_case(case, "ghk"))
        out.append(ghk.model_copy(update={"name": f"{ghk.name}_{case.alias.lower()}"}))
        out.append(_flag(f"theta_specialization_{case.alias.lower()}", specialization_check(case)))
    return out


def _family_angles(settings: Settings) -> list[CheckResult]:
    return _each_case(lambda d: _check_angles(CaseId(d.case), settings))


def _family_affine(settings: Settings) -> list[CheckResult]:
    return _each_case(_check_affine)


def _family_trop(settings: Settings) -> list[CheckResult]:
    return _each_case(_check_trop)


_FAMILY_RUNNERS: dict[str, Callable[[Settings], list[CheckResult]]] = {
    "pentagon": _family_pentagon,
    "focus-focus": _family_focus_focus,
    "consistency": _family_consistency,
    "theta": _family_theta,
    "angles": _family_angles,
    "affine": _family_affine,
    "trop": _family_trop,
}


def run_family(family: str, settings: Settings) -> Report:
    """One family of checks across all cases (or a random sweep)."""
    if family not in _FAMILY_RUNNERS:
        raise ValueError(f"unknown check family {family!r}; choose from {', '.join(FAMILIES)}")
    logger.info("running check family %s", family)
    t0 = time.perf_counter()
    try:
        checks = _FAMILY_RUNNERS[family](settings)
    except ValueError as e:
        logger.warning("family %s raised: %s", family, e)
        checks = [CheckResult(name=family.replace("-", "_"), passed=False, detail=f"{type(e).__name__}: {e}")]
    for r in checks:
        if not r.passed:
            logger.warning("check %s failed", r.name)
    timing = {family: round(time.perf_counter() - t0, 6)} if settings.timing else None
    return Report(command=f"check {family}", checks=checks, timing=timing)


def run_bghk(selfints: Sequence[int], settings: Settings) -> Report:
    """Affine structure from an arbitrary self-intersection sequence."""
    structure = build_bghk(selfints)
    g = global_monodromy(structure)
    classes = divisor_classes(structure.n)
    relations = [gluing_ring_relation(structure, i).text for i in range(1, structure.n + 1)]
    checks = [
        _flag("affine_recurrence", recurrence_identity_check(structure), [" ".join(f"({v.a},{v.b})" for v in structure.rays)]),
        _flag("affine_charts", chart_relations_check(structure)),
        _flag("global_monodromy", g.det == 1, [f"{g} (order {map_order(g)})"]),
        _flag("pl_section", pl_section_check(structure, classes)),
        _flag("gluing_relations", gluing_relations_check(structure), relations),
    ]
    return Report(command="bghk", checks=checks)
