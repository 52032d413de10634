"""Wall-crossing automorphisms, path-ordered products and their consistency identities."""
import logging
from typing import Optional, Sequence

from scatkit.errors import NonPrimitiveError, PairingNotOneError
from scatkit.models import (
    E1,
    E2,
    Cross,
    LatticeVector,
    LaurentPoly,
    RatFn,
    ScatteringDiagram,
    TorusAuto,
    Twist,
    Wall,
    pair,
    picard_lefschetz,
    z,
)
from scatkit.models.auto import Generator
from scatkit.models.lattice import complement
from scatkit.schemas import CheckResult

logger = logging.getLogger(__name__)


def kappa(gamma: LatticeVector, d: int = 1, sign: int = 1) -> Cross:
    """K_gamma: crossing the specialized wall (1 + z^gamma)^d."""
    return Cross(Wall.simple(gamma, d), sign)


def cross_action(w: Wall, sign: int, m: LatticeVector) -> RatFn:
    """z^m * (kink * f_w)^(sign * <m, gamma_w>)."""
    e = sign * pair(m, w.boundary_class)
    mono = LaurentPoly.monomial(m, w.kink ** e)
    f = w.function()
    if e >= 0:
        return RatFn(mono * f ** e)
    return RatFn(mono, f ** -e)


def _image_poly(gen: Generator, p: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly, int]:
    """Image of p as (num, f, k): num / f^k for a crossing, (num, 1, 0) for a twist."""
    if isinstance(gen, Twist):
        return p.map_lattice(gen.matrix), LaurentPoly.constant(1), 0
    w = gen.wall
    f = w.function()
    exps = {key: gen.sign * pair(key[0], w.boundary_class) for key in p.terms}
    emin = min(min(exps.values(), default=0), 0)
    num = LaurentPoly()
    for (m, c), k in p.terms.items():
        e = exps[(m, c)]
        num = num + LaurentPoly.monomial(m, c * w.kink ** e, k) * f ** (e - emin)
    return num, f, -emin


def apply_generator(gen: Generator, expr: RatFn) -> RatFn:
    """Substitute the generator's monomial images into expr."""
    if isinstance(gen, Twist):
        return expr.map_lattice(gen.matrix)
    n1, f, p = _image_poly(gen, expr.num)
    n2, _, q = _image_poly(gen, expr.den)
    # (n1 / f^p) / (n2 / f^q)
    if q >= p:
        out = RatFn(n1 * f ** (q - p), n2)
    else:
        out = RatFn(n1, n2 * f ** (p - q))
    return out.reduced(gen.wall.factors())


def apply_auto(auto: TorusAuto, p) -> RatFn:
    """Run the word left to right on p (a LaurentPoly or RatFn)."""
    expr = p if isinstance(p, RatFn) else RatFn(p)
    for gen in auto.word:
        expr = apply_generator(gen, expr)
    return expr


def partial_images(auto: TorusAuto, p) -> list[RatFn]:
    """The running expression after each generator of the word."""
    expr = p if isinstance(p, RatFn) else RatFn(p)
    out = []
    for gen in auto.word:
        expr = apply_generator(gen, expr)
        out.append(expr)
    return out


def compose(a: TorusAuto, b: TorusAuto) -> TorusAuto:
    """a first, then b."""
    return a.then(b)


def auto_eq(
    a: TorusAuto, b: TorusAuto, basis: Optional[Sequence[LatticeVector]] = None
) -> bool:
    """Equal as automorphisms: compare images of a lattice basis."""
    for m in basis or (E1, E2):
        if not apply_auto(a, z(m)).equals(apply_auto(b, z(m))):
            return False
    return True


def pentagon_check(gamma: LatticeVector, gamma_p: LatticeVector) -> bool:
    """[K_gamma', K_gamma] == [K_gamma, K_{gamma+gamma'}, K_gamma'] as words."""
    if pair(gamma_p, gamma) != 1:
        raise PairingNotOneError(f"<{gamma_p}, {gamma}> = {pair(gamma_p, gamma)}, need 1")
    lhs = TorusAuto.of(kappa(gamma_p), kappa(gamma))
    rhs = TorusAuto.of(kappa(gamma), kappa(gamma + gamma_p), kappa(gamma_p))
    return auto_eq(lhs, rhs, basis=(gamma_p, gamma))


def focus_focus_word(gamma: LatticeVector, d: int = 1) -> TorusAuto:
    return TorusAuto.of(kappa(gamma, d), kappa(-gamma, d))


def focus_focus_check(gamma: LatticeVector) -> bool:
    """Crossing gamma then -gamma counterclockwise acts as the inverse Picard-Lefschetz twist."""
    if gamma.is_zero() or not gamma.is_primitive():
        raise NonPrimitiveError(f"{gamma} is not primitive")
    twist = TorusAuto.of(Twist(picard_lefschetz(gamma).inverse()))
    return auto_eq(focus_focus_word(gamma), twist, basis=(gamma, complement(gamma)))


def crossing_word(diagram: ScatteringDiagram, first: int, last: int) -> TorusAuto:
    """Cross walls first..last counterclockwise; empty when first > last."""
    return TorusAuto(tuple(Cross(diagram.wall(i), 1) for i in range(first, last + 1)))


def reverse_crossing_word(diagram: ScatteringDiagram, first: int, last: int) -> TorusAuto:
    """Cross walls first, first-1, .., last clockwise; empty when first < last."""
    return TorusAuto(tuple(Cross(diagram.wall(i), -1) for i in range(first, last - 1, -1)))


def loop_word(diagram: ScatteringDiagram, start: int = 0) -> TorusAuto:
    """Counterclockwise loop based in chamber `start`, the cut crossed with the monodromy twist."""
    n = diagram.n
    return TorusAuto(
        crossing_word(diagram, start + 1, n).word
        + (Twist(diagram.monodromy),)
        + crossing_word(diagram, 1, start).word
    )


def clockwise_loop_word(diagram: ScatteringDiagram) -> TorusAuto:
    """Clockwise loop based in chamber 0."""
    return TorusAuto((Twist(diagram.monodromy.inverse()),) + reverse_crossing_word(diagram, diagram.n, 1).word)


def _identity_witnesses(auto: TorusAuto) -> tuple[bool, list[str]]:
    ok = True
    witnesses = []
    for m in (E1, E2):
        image = apply_auto(auto, z(m))
        witnesses.append(f"z^{{{m}}} -> {image}")
        ok = ok and image.equals(RatFn(z(m)))
    return ok, witnesses


def loop_consistency(diagram: ScatteringDiagram) -> CheckResult:
    """Full counterclockwise loop composed with the monodromy twist is the identity."""
    flat = diagram.specialize()
    ok, witnesses = _identity_witnesses(loop_word(flat))
    logger.debug("loop consistency for %s: %s", diagram.case, ok)
    detail = None if diagram.coeff_mode == "specialized" else "checked on the specialized diagram"
    return CheckResult(name="loop_consistency", passed=ok, witnesses=witnesses, detail=detail)


def homotopy_check(diagram: ScatteringDiagram) -> bool:
    """Clockwise loop is the identity, and so is clockwise followed by counterclockwise."""
    flat = diagram.specialize()
    cw = clockwise_loop_word(flat)
    ident = TorusAuto()
    return auto_eq(cw, ident) and auto_eq(cw.then(loop_word(flat)), ident)


def cancellation_chain(diagram: ScatteringDiagram, a: LatticeVector, start: int = 1) -> list[RatFn]:
    """Partial products of the loop based in chamber `start` applied to z^a."""
    return partial_images(loop_word(diagram.specialize(), start), z(a))


def mutation_check(diagram: ScatteringDiagram) -> CheckResult:
    """Crossing wall i+1 sends z^{gamma_i} to z^{gamma_i} (1 + z^{gamma_{i+1}})^{-d} and fixes z^{gamma_{i+1}}."""
    flat = diagram.specialize()
    ok = True
    witnesses = []
    for i in range(1, flat.n):
        w = flat.wall(i + 1)
        g_i, g_next = flat.wall(i).boundary_class, w.boundary_class
        image = cross_action(w, 1, g_i)
        expected = RatFn(z(g_i)) * RatFn(w.function()) ** -1
        fixed = cross_action(w, 1, g_next).equals(RatFn(z(g_next)))
        good = image.equals(expected) and fixed
        ok = ok and good
        witnesses.append(f"z^{{{g_i}}} -> {image}")
    return CheckResult(name="mutation", passed=ok, witnesses=witnesses)


def cluster_form_word(diagram: ScatteringDiagram) -> TorusAuto:
    """Two focus-focus pairs with vanishing cycles e1 and e2 (the latter of wall 2's multiplicity)."""
    d2 = diagram.wall(2).multiplicity
    return TorusAuto.of(kappa(-E1), kappa(E1), kappa(E2, d2), kappa(-E2, d2))


def cluster_form_check(diagram: ScatteringDiagram) -> CheckResult:
    """The counterclockwise crossing product equals the two-cut word."""
    flat = diagram.specialize()
    ok = auto_eq(crossing_word(flat, 1, flat.n), cluster_form_word(flat))
    witnesses = [str(cluster_form_word(flat))]
    return CheckResult(name="cluster_form", passed=ok, witnesses=witnesses)