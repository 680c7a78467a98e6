"""Heuristic Rating Estimation over pairwise comparison matrices.

Builds the linear system tying unknown concept utilities to known reference
utilities through expert judgment ratios, solves it, and certifies via an
inconsistency bound and direct M-matrix evidence that a unique strictly
positive ranking exists.
"""

from .eigen import EigenRanking, compare_rankings, principal_eigenvector
from .errors import (
    DomainError,
    HreError,
    InfeasibleSolution,
    InputError,
    LabelMismatch,
    NonConvergence,
    NonPositiveEntry,
    NonUnitDiagonal,
    NotSquare,
    NumericalDisagreement,
    ReciprocityViolation,
    SingularSystem,
    TooSmall,
    ValidationError,
)
from .io import load_matrix_file, parse_document, partition_from_known
from .pcmatrix import (
    ConceptPartition,
    PCMatrix,
    TriadInconsistency,
    extract_unknown_minor,
    koczkodaj_index,
    koczkodaj_index_or_zero,
    triad_kappa,
    validate_pc_matrix,
    worst_triad,
)
from .solvability import (
    MMatrixEvidence,
    SolvabilityCertificate,
    bound_table,
    check_solvability,
    is_nonsingular_m_matrix,
    linear_bound,
    render_bound_table,
    theorem_bound,
)
from .solver import (
    HreSystem,
    Ranking,
    build_system,
    fixed_point_oracle,
    rank_hre,
    solve_system,
)

__all__ = [
    "ConceptPartition",
    "DomainError",
    "EigenRanking",
    "HreError",
    "HreSystem",
    "InfeasibleSolution",
    "InputError",
    "LabelMismatch",
    "MMatrixEvidence",
    "NonConvergence",
    "NonPositiveEntry",
    "NonUnitDiagonal",
    "NotSquare",
    "NumericalDisagreement",
    "PCMatrix",
    "Ranking",
    "ReciprocityViolation",
    "SingularSystem",
    "SolvabilityCertificate",
    "TooSmall",
    "TriadInconsistency",
    "ValidationError",
    "bound_table",
    "build_system",
    "check_solvability",
    "compare_rankings",
    "extract_unknown_minor",
    "fixed_point_oracle",
    "is_nonsingular_m_matrix",
    "koczkodaj_index",
    "koczkodaj_index_or_zero",
    "linear_bound",
    "load_matrix_file",
    "parse_document",
    "partition_from_known",
    "principal_eigenvector",
    "rank_hre",
    "render_bound_table",
    "solve_system",
    "theorem_bound",
    "triad_kappa",
    "validate_pc_matrix",
    "worst_triad",
]

__version__ = "0.1.0"
