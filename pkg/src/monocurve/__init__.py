"""Exact computations with symbolic powers of space monomial curve ideals."""

from .colength import (
    Staircase,
    proof_generating_set,
    reduce_and_monomialize,
    staircase_length,
    verify_symbolic_equality,
)
from .curvegen import MatrixExponents, MatrixType, classify, curve_exponents, minimal_relations, weights_of
from .gradedmembership import IdealGens, component_membership, contained, ideal_power, is_member, m_multiples
from .harbourne import stable_n, third_power_criterion, verify_harbourne_profile
from .polyring import QQ, FieldSpec, Poly, Weights
from .sympow import d_poly, fgh, sympow_basis

__version__ = "0.1.0"

__all__ = [
    "FieldSpec",
    "IdealGens",
    "MatrixExponents",
    "MatrixType",
    "Poly",
    "QQ",
    "Staircase",
    "Weights",
    "classify",
    "component_membership",
    "contained",
    "curve_exponents",
    "d_poly",
    "fgh",
    "ideal_power",
    "is_member",
    "m_multiples",
    "minimal_relations",
    "proof_generating_set",
    "reduce_and_monomialize",
    "stable_n",
    "staircase_length",
    "sympow_basis",
    "third_power_criterion",
    "verify_harbourne_profile",
    "verify_symbolic_equality",
    "weights_of",
]
