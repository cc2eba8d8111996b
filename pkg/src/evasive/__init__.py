"""Explicit subspace-evasive sets over prime fields.

A set S in F_p^n is (k, c)-subspace evasive when every affine subspace of
dimension k meets it in at most c points. This package builds S as a product
of varieties cut out by sums of monomials x_j^{d_j}, encodes messages into S,
and intersects S with a given low-dimensional subspace.
"""

from .errors import (DimensionError, EvasiveError, FieldMismatchError, GuardExceeded, NotAMemberError,
                     ParameterError, SearchExhausted, SingularMatrixError)
from .field import FieldElement, PrimeField, is_prime
from .linalg import AffineSubspace, EchelonMap, is_strongly_regular, normalize, solve, vandermonde
from .params import EvasiveParams, FieldPlan, explicit_params, gen_field_plan, gen_params
from .variety import BlockVariety
from .evasive import EvasiveSet
from .intersect import SolverKind, TriangularSystem, intersect_set, solve_block, triangularize
from .listdec import SimConfig, TrialResult, composed_rate, oracle_subspace, run_trial, simulate

__version__ = "0.1.0"

__all__ = [
    "AffineSubspace", "BlockVariety", "DimensionError", "EchelonMap", "EvasiveError", "EvasiveParams",
    "EvasiveSet", "FieldElement", "FieldMismatchError", "FieldPlan", "GuardExceeded", "NotAMemberError",
    "ParameterError", "PrimeField", "SearchExhausted", "SimConfig", "SingularMatrixError", "SolverKind",
    "TrialResult", "TriangularSystem", "composed_rate", "explicit_params", "gen_field_plan", "gen_params",
    "intersect_set", "is_prime", "is_strongly_regular", "normalize", "oracle_subspace", "run_trial",
    "simulate", "solve", "solve_block", "triangularize", "vandermonde",
]
