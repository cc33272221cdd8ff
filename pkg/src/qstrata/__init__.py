"""Exact computational engine for stratum dimensions, heights, and degree
triples of uniparameter quantum tori, quantum affine spaces, and quantum
Schubert cells."""

from .exact_linalg import (Matrix, integer_kernel_basis, kernel_basis_q,
                           kernel_dim_q, rank_q)
from .quantum_affine import (AffineSpaceSpec, StratumReport, hprime_height,
                             primdeg_in_stratum, skew_adjacency, stratum_dim,
                             stratum_report, verify_strata_inequality)
from .quantum_torus import (CenterDescription, TorusSpec, center_description,
                            degree_of_prime)
from .root_system import (CartanType, RootSystem, build_root_system, inner,
                          simple_reflection)
from .schubert import (CauchonEntry, SchubertData, SchubertSpec,
                       build_schubert, cauchon_entries, degree_table,
                       stratum_dim_matrix, stratum_dim_operator,
                       verify_bcl_agreement, verify_crucial_inequality,
                       verify_poset_monotone)
from .weyl import (WeylElement, bruhat_interval, bruhat_leq, from_word,
                   is_reduced, positive_subexpression, subexpression_element)

__version__ = "0.1.0"

__all__ = [
    "Matrix", "rank_q", "kernel_dim_q", "kernel_basis_q",
    "integer_kernel_basis",
    "CartanType", "RootSystem", "build_root_system", "inner",
    "simple_reflection",
    "WeylElement", "from_word", "is_reduced", "bruhat_leq", "bruhat_interval",
    "subexpression_element", "positive_subexpression",
    "AffineSpaceSpec", "StratumReport", "skew_adjacency", "stratum_dim",
    "hprime_height", "primdeg_in_stratum", "stratum_report",
    "verify_strata_inequality",
    "TorusSpec", "CenterDescription", "center_description", "degree_of_prime",
    "SchubertSpec", "SchubertData", "CauchonEntry", "build_schubert",
    "cauchon_entries", "stratum_dim_matrix", "stratum_dim_operator",
    "verify_bcl_agreement", "verify_crucial_inequality",
    "verify_poset_monotone", "degree_table",
]
