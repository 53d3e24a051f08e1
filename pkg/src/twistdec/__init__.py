"""Wedderburn decompositions of twisted metacyclic group algebras.

Core entry points:

    validate_spec(p, m, r)            -> GroupSpec
    classify_lambda(ell, m, lam)      -> CocycleClass
    wedderburn(spec, cls)             -> Decomposition (closed form)
    oracle_decomposition(spec, cls)   -> block multiset (brute force)
"""

from .cohomology import (
    CocycleClass,
    GroupSpec,
    build_cocycle,
    classify_lambda,
    h2_structure,
    is_cocycle,
    validate_spec,
)
from .decompose import (
    Decomposition,
    SimpleBlock,
    commutative_component,
    dimension_check,
    irreducible_projective_degrees,
    table_report,
    wedderburn,
)
from .errors import ConsistencyError, ParameterError
from .oracle import build_algebra, oracle_decomposition, verify_associativity
from .orbits import cm_orbits, frobenius_orbits, stabilizer_params

__version__ = "0.1.0"

__all__ = [
    "CocycleClass",
    "ConsistencyError",
    "Decomposition",
    "GroupSpec",
    "ParameterError",
    "SimpleBlock",
    "build_algebra",
    "build_cocycle",
    "classify_lambda",
    "cm_orbits",
    "commutative_component",
    "dimension_check",
    "frobenius_orbits",
    "h2_structure",
    "irreducible_projective_degrees",
    "is_cocycle",
    "oracle_decomposition",
    "stabilizer_params",
    "table_report",
    "validate_spec",
    "verify_associativity",
    "wedderburn",
]
