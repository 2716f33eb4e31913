"""Derived invariants and Hochschild cohomology of gentle algebras of type A-tilde."""
from .ag import AGInvariant, ag_equal, ag_invariant, format_ag, parse_ag
from .atilde import (
    BranchParams,
    extract_params,
    generate_normal_form,
    is_atilde_branched,
    is_m_cluster_tilted_atilde,
    phi_from_params,
    theorem_a_dims,
    theorem_a_dims_proof_faithful,
    theorem_a_discrepancy,
)
from .gerstenhaber import gentle_pairs, gerstenhaber_nontrivial
from .hochschild import FieldSpec, hh_dim, hh_sequence
from .quiver import BoundQuiver, QuiverError, is_gentle, load_bound_quiver, parse_bound_quiver
from .threads import forbidden_threads, permitted_threads

__version__ = "0.1.0"

__all__ = [
    "AGInvariant", "BoundQuiver", "BranchParams", "FieldSpec", "QuiverError",
    "ag_equal", "ag_invariant", "extract_params", "forbidden_threads", "format_ag",
    "generate_normal_form", "gentle_pairs", "gerstenhaber_nontrivial", "hh_dim",
    "hh_sequence", "is_atilde_branched", "is_gentle", "is_m_cluster_tilted_atilde",
    "load_bound_quiver", "parse_ag", "parse_bound_quiver", "permitted_threads",
    "phi_from_params", "theorem_a_dims", "theorem_a_dims_proof_faithful",
    "theorem_a_discrepancy",
]
