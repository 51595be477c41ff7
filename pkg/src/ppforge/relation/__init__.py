"""Integer relation detection."""

from .lattice import ext_gcd, gauss_reduce, kernel_basis_3, norm2
from .pslq import (
    CONFIDENCE_DROP,
    InconclusiveSearch,
    RelationProblem,
    RelationResult,
    SearchOutcome,
    canonical,
    find_integer_relation,
    search_relation,
    verify_relation,
)

__all__ = [
    "ext_gcd", "gauss_reduce", "kernel_basis_3", "norm2",
    "CONFIDENCE_DROP", "InconclusiveSearch", "RelationProblem", "RelationResult",
    "SearchOutcome", "canonical", "find_integer_relation", "search_relation", "verify_relation",
]
