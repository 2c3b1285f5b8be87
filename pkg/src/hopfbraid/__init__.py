"""Exact Drinfeld doubles, Schroedinger modules and braided dimensions."""

from .braids import (
    BraidWord,
    braid_operator,
    braided_dim,
    braiding_map,
    parse_braid,
    partial_trace_step,
    t2q_closed_form,
    torus_braid,
)
from .double import QuasitriangularData, build_double, drinfeld_elements, phi_iso, validate_qt
from .fields import GF, QQ, cyclotomic
from .hopf import HopfAlgebra, dual, integrals, semisimplicity_predicates, trace_s_squared, validate_hopf
from .modules import ModuleData, dual_schrodinger, find_iso, schrodinger, tensor_module
from .oracle import fy_apply, fy_fixed_points
from .zoo import algebra_from_spec, dual_group_algebra, group_algebra, make_group, sweedler, taft

__all__ = [
    "BraidWord",
    "GF",
    "HopfAlgebra",
    "ModuleData",
    "QQ",
    "QuasitriangularData",
    "algebra_from_spec",
    "braid_operator",
    "braided_dim",
    "braiding_map",
    "build_double",
    "cyclotomic",
    "drinfeld_elements",
    "dual",
    "dual_group_algebra",
    "dual_schrodinger",
    "find_iso",
    "fy_apply",
    "fy_fixed_points",
    "group_algebra",
    "integrals",
    "make_group",
    "parse_braid",
    "partial_trace_step",
    "phi_iso",
    "schrodinger",
    "semisimplicity_predicates",
    "sweedler",
    "t2q_closed_form",
    "taft",
    "tensor_module",
    "torus_braid",
    "trace_s_squared",
    "validate_hopf",
    "validate_qt",
]
