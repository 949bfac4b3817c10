"""Exhaustive, isomorph-free generation of fullerene graphs."""

from .planar import (
    DualFullerene,
    PrimalFullerene,
    validate,
    to_primal,
    dual_of_primal,
    distance,
    min_pentagon_distance,
)
from .seeds import SeedKind, build_seed, apply_F
from .expansions import (
    ExpansionKind,
    ExpansionSite,
    ReductionTriple,
    enumerate_reductions,
    enumerate_expansion_sites,
    apply_expansion,
    apply_reduction,
)
from .canonical import (
    bfs_code,
    invariant_prefix,
    is_canonical,
    site_equivalence_classes,
    compute_automorphism_group,
)
from .lookahead import min_nv_for_length, canonical_length_bound, prune_expansion
from .generator import GenerationTask, GenerationStats, generate
from .oracle import canonical_form, closure_generate, is_ipr, is_hamiltonian

__all__ = [
    "DualFullerene",
    "PrimalFullerene",
    "validate",
    "to_primal",
    "dual_of_primal",
    "distance",
    "min_pentagon_distance",
    "SeedKind",
    "build_seed",
    "apply_F",
    "ExpansionKind",
    "ExpansionSite",
    "ReductionTriple",
    "enumerate_reductions",
    "enumerate_expansion_sites",
    "apply_expansion",
    "apply_reduction",
    "bfs_code",
    "invariant_prefix",
    "is_canonical",
    "site_equivalence_classes",
    "compute_automorphism_group",
    "min_nv_for_length",
    "canonical_length_bound",
    "prune_expansion",
    "GenerationTask",
    "GenerationStats",
    "generate",
    "canonical_form",
    "closure_generate",
    "is_ipr",
    "is_hamiltonian",
]
