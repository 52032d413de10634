"""Value types: lattice, algebra, walls and diagrams."""
from scatkit.models.lattice import (
    E1,
    E2,
    SKEW,
    ZERO,
    LatticeVector,
    SkewForm,
    UnimodularMap,
    apply_map,
    factor_monodromy,
    map_order,
    pair,
    picard_lefschetz,
)
from scatkit.models.coeffs import ONE, CoeffMonomial
from scatkit.models.laurent import LaurentPoly, lp_add, lp_mul, lp_neg, z
from scatkit.models.ratfn import RatFn, rf_eq, rf_pow
from scatkit.models.series import (
    RationalSeries,
    multiple_cover,
    series_exp,
    series_log,
    wall_function_from_invariants,
)
from scatkit.models.wall import Wall
from scatkit.models.diagram import ScatteringDiagram
from scatkit.models.auto import Cross, TorusAuto, Twist

__all__ = [
    "E1",
    "E2",
    "SKEW",
    "ZERO",
    "LatticeVector",
    "SkewForm",
    "UnimodularMap",
    "apply_map",
    "factor_monodromy",
    "map_order",
    "pair",
    "picard_lefschetz",
    "ONE",
    "CoeffMonomial",
    "LaurentPoly",
    "lp_add",
    "lp_mul",
    "lp_neg",
    "z",
    "RatFn",
    "rf_eq",
    "rf_pow",
    "RationalSeries",
    "multiple_cover",
    "series_exp",
    "series_log",
    "wall_function_from_invariants",
    "Wall",
    "ScatteringDiagram",
    "Cross",
    "TorusAuto",
    "Twist",
]
