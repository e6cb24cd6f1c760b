"""Exact log canonical thresholds of ideals generated by monomials and binomials."""

from .gamma_fan import RayTable, enumerate_rays, global_lct, hyperplane_rows
from .ideal import GeneralBinomialIdeal, Generator, IdealTriple, parse_ideal, triple_of
from .lct_eval import LctBreakdown, LctFunction, evaluate, evaluate_star
from .linalg import INF
from .newton import DivisorShift, NewtonPolyhedron, howald_lct, newton_contains
from .resolution import lct_via_resolution, pseudo_resolve
from .torus import is_torus_unit, r_zero

__version__ = "0.1.0"

__all__ = [
    "INF",
    "DivisorShift",
    "GeneralBinomialIdeal",
    "Generator",
    "IdealTriple",
    "LctBreakdown",
    "LctFunction",
    "NewtonPolyhedron",
    "RayTable",
    "enumerate_rays",
    "evaluate",
    "evaluate_star",
    "global_lct",
    "howald_lct",
    "hyperplane_rows",
    "is_torus_unit",
    "lct_via_resolution",
    "newton_contains",
    "parse_ideal",
    "pseudo_resolve",
    "r_zero",
    "triple_of",
]
