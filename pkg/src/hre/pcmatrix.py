"""Pairwise comparison matrices: validation, inconsistency, minors.

A PC matrix holds strictly positive judgment ratios m_ij with unit diagonal
and reciprocal pairs m_ij * m_ji = 1.  Inconsistency is measured per triad:
a triad (i, j, k) is consistent when m_ij = m_ik * m_kj, and its deviation

    kappa(i, j, k) = min(|1 - m_ij / (m_ik * m_kj)|,
                         |1 - (m_ik * m_kj) / m_ij|)

always lies in [0, 1).  The global index is the worst kappa over all triads.
"""

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import (
    NonPositiveEntry,
    NonUnitDiagonal,
    NotSquare,
    ReciprocityViolation,
    TooSmall,
    ValidationError,
)

DEFAULT_RECIPROCITY_TOLERANCE = 1e-9


@dataclass(frozen=True, eq=False)
class PCMatrix:
    """Validated n x n strictly positive reciprocal judgment matrix."""

    entries: np.ndarray

    @property
    def size(self) -> int:
        return self.entries.shape[0]

    def __post_init__(self):
        self.entries.setflags(write=False)


@dataclass(frozen=True)
class TriadInconsistency:
    """Worst-offending triad: indices (i, j, k) with middle index k."""

    indices: tuple[int, int, int]
    kappa: float


@dataclass(frozen=True)
class ConceptPartition:
    """Split of the n concepts into unknowns C_U and references C_K.

    known_values maps concept index -> fixed strictly positive utility.
    Unknown indices keep their original order; k = |C_U|, r = n - k.
    """

    concept_labels: tuple[str, ...]
    unknown_indices: tuple[int, ...]
    known_values: dict[int, float] = field(compare=False)

    def __post_init__(self):
        n = len(self.concept_labels)
        unknown = set(self.unknown_indices)
        known = set(self.known_values)
        if unknown & known:
            raise ValidationError("unknown and known index sets overlap")
        if unknown | known != set(range(n)):
            raise ValidationError("partition does not cover all concepts")
        if len(unknown) < 1:
            raise ValidationError("at least one unknown concept is required")
        if len(known) < 1:
            raise ValidationError("at least one reference concept is required")
        for i, v in self.known_values.items():
            if not v > 0:
                raise ValidationError(
                    f"known value for '{self.concept_labels[i]}' must be > 0, got {v}"
                )

    @property
    def n(self) -> int:
        return len(self.concept_labels)

    @property
    def k(self) -> int:
        return len(self.unknown_indices)

    @property
    def r(self) -> int:
        return self.n - self.k


def validate_pc_matrix(raw, reciprocity_tolerance=DEFAULT_RECIPROCITY_TOLERANCE) -> PCMatrix:
    """Validate a raw square array as a PC matrix.

    Entries are stored exactly as given; reciprocity violations are reported,
    never repaired.  The diagonal must equal 1 exactly.
    """
    m = np.asarray(raw, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotSquare(f"expected a square matrix, got shape {m.shape}")
    n = m.shape[0]
    if n < 2:
        raise NotSquare(f"matrix must be at least 2x2, got {n}x{n}")
    for i in range(n):
        for j in range(n):
            if not m[i, j] > 0:
                raise NonPositiveEntry(i, j, m[i, j])
    for i in range(n):
        if m[i, i] != 1.0:
            raise NonUnitDiagonal(i, m[i, i])
    for i in range(n):
        for j in range(i + 1, n):
            residual = abs(m[i, j] * m[j, i] - 1.0)
            if residual > reciprocity_tolerance:
                raise ReciprocityViolation(i, j, residual)
    return PCMatrix(entries=m)


def triad_kappa(M: PCMatrix, i: int, j: int, k: int) -> float:
    """Deviation of the triad (i, j, k) from consistency, middle index k."""
    n = M.size
    if len({i, j, k}) != 3:
        raise IndexError(f"triad indices must be pairwise distinct, got ({i},{j},{k})")
    for t in (i, j, k):
        if not 0 <= t < n:
            raise IndexError(f"triad index {t} out of range for n={n}")
    m = M.entries
    ratio = m[i, j] / (m[i, k] * m[k, j])
    return float(min(abs(1.0 - ratio), abs(1.0 - 1.0 / ratio)))


def _triad_iter(n):
    # Unordered triples; the 3 choices of middle index cover all ordered
    # triads up to the symmetry of the min in kappa.
    for a, b, c in combinations(range(n), 3):
        yield (a, b, c)
        yield (a, c, b)
        yield (b, c, a)


def worst_triad(M: PCMatrix) -> TriadInconsistency | None:
    """Triad achieving the inconsistency index; None when n < 3."""
    if M.size < 3:
        return None
    best = None
    for i, j, k in _triad_iter(M.size):
        kappa = triad_kappa(M, i, j, k)
        if best is None or kappa > best.kappa:
            best = TriadInconsistency((i, j, k), kappa)
    return best


def koczkodaj_index(M: PCMatrix) -> float:
    """Worst triad deviation over the whole matrix, in [0, 1).

    Undefined (TooSmall) for n < 3; callers that want a total function use
    koczkodaj_index_or_zero.
    """
    if M.size < 3:
        raise TooSmall(f"inconsistency index requires n >= 3, got n={M.size}")
    return worst_triad(M).kappa


def koczkodaj_index_or_zero(M: PCMatrix) -> float:
    """Inconsistency index with the n < 3 convention of 0 (no triads exist)."""
    return 0.0 if M.size < 3 else koczkodaj_index(M)


def extract_unknown_minor(M: PCMatrix, p) -> PCMatrix:
    """Restriction of M to the unknown concepts, preserving their order.

    Accepts a ConceptPartition or a bare index sequence (so the restriction
    to the full index set is expressible).  The result is itself a valid PC
    matrix; its triads are a subset of M's, so its inconsistency index never
    exceeds M's.
    """
    idx = np.asarray(getattr(p, "unknown_indices", p), dtype=int)
    sub = M.entries[np.ix_(idx, idx)].copy()
    return PCMatrix(entries=sub)
