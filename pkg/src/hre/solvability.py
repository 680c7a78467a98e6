"""Solvability certification for the HRE system.

The system matrix A has unit diagonal and nonpositive off-diagonals, so it
is an M-matrix (hence inverse-positive, hence A*mu = b has a unique strictly
positive solution) whenever the data is consistent enough.  The sufficient
condition, in terms of the inconsistency index K of the minor restricted to
the unknown concepts, is

    K < 1 - (1 + sqrt(1 + 4(n-1)(n-r-2))) / (2(n-1))      for 0 < r <= n-2

where n is the total concept count and r the number of references.  The
certificate pairs this bound with direct numerical M-matrix evidence on A:
inverse positivity (the authoritative check) cross-checked against the
spectral decomposition A = sI - B with s >= rho(B).
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NumericalDisagreement
from .pcmatrix import (
    ConceptPartition,
    PCMatrix,
    extract_unknown_minor,
    koczkodaj_index,
    koczkodaj_index_or_zero,
)
from .solver import build_system

INVERSE_ENTRY_TOLERANCE_FACTOR = 1e-10
SPECTRAL_TOLERANCE = 1e-9
POWER_ITERATION_CAP = 10000
POWER_ITERATION_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class MMatrixEvidence:
    """Direct numerical evidence that a matrix is a nonsingular M-matrix."""

    is_m_matrix: bool
    in_z_class: bool
    inverse_nonnegative: bool
    min_inverse_entry: float | None
    s: float
    spectral_radius: float
    semipositive_witness: list[float] | None


@dataclass(frozen=True, eq=False)
class SolvabilityCertificate:
    """Verdict on whether a unique strictly positive ranking is guaranteed.

    guaranteed compares the minor's inconsistency K against the bound; the
    full-matrix index is reported for information only.  scalar_case marks
    the trivial r = n-1 system (A is the scalar 1).
    """

    n: int
    r: int
    k: int
    kappa_full: float
    kappa_minor: float
    alpha: float
    bound: float | None
    guaranteed: bool
    scalar_case: bool
    m_matrix_evidence: MMatrixEvidence


def _check_domain(n: int, r: int):
    if n < 3:
        raise DomainError(f"bound requires n >= 3, got n={n}")
    if not 0 < r <= n - 2:
        raise DomainError(
            f"bound requires 0 < r <= n-2, got r={r} for n={n} "
            "(r = n-1 is the trivial scalar case)"
        )


def theorem_bound(n: int, r: int) -> float:
    """Inconsistency threshold below which a positive solution is guaranteed."""
    _check_domain(n, r)
    return 1.0 - (1.0 + math.sqrt(1.0 + 4.0 * (n - 1) * (n - r - 2))) / (2.0 * (n - 1))


def linear_bound(n: int, r: int) -> float:
    """The weaker linear threshold 1 - (n-r-1)/(n-1); equals theorem_bound at r = n-2."""
    _check_domain(n, r)
    return 1.0 - (n - r - 1) / (n - 1)


def bound_table(n_max: int) -> dict[int, dict[int, float]]:
    """Triangular table {n: {r: bound}} for 3 <= n <= n_max, 1 <= r <= n-2."""
    if n_max < 3:
        raise DomainError(f"bound table requires n_max >= 3, got {n_max}")
    return {
        n: {r: theorem_bound(n, r) for r in range(1, n - 1)}
        for n in range(3, n_max + 1)
    }


def truncate_bound(value: float, decimals=3) -> float:
    """Truncate toward zero; the published reference table truncates its
    3-decimal entries rather than rounding them."""
    scale = 10 ** decimals
    return math.floor(value * scale + 1e-9) / scale


def render_bound_table(n_max: int, csv=False, decimals=3) -> str:
    """Aligned-text (or CSV) rendering; '-' marks out-of-domain cells."""
    table = bound_table(n_max)
    r_max = n_max - 2
    header = ["K(M) <"] + [f"r={r}" for r in range(1, r_max + 1)]
    rows = []
    for n in range(3, n_max + 1):
        cells = [f"n={n}"]
        for r in range(1, r_max + 1):
            cells.append(f"{truncate_bound(table[n][r], decimals):.{decimals}f}"
                         if r in table[n] else "-")
        rows.append(cells)
    if csv:
        return "\n".join(",".join(row) for row in [header] + rows) + "\n"
    widths = [max(len(row[c]) for row in [header] + rows) for c in range(len(header))]
    lines = [
        "  ".join(cell.rjust(widths[c]) for c, cell in enumerate(row))
        for row in [header] + rows
    ]
    return "\n".join(lines) + "\n"


def _spectral_radius_nonneg(B: np.ndarray) -> float:
    """Power iteration for the Perron eigenvalue of a nonnegative matrix.

    Runs on B + cI and subtracts the shift: the positive diagonal makes the
    matrix aperiodic, so the iteration cannot cycle (a plain power step
    oscillates forever on e.g. a 2x2 zero-diagonal B, whose eigenvalues have
    equal modulus).
    """
    k = B.shape[0]
    if k == 0 or not np.any(B):
        return 0.0
    shift = max(1.0, float(np.max(B)))
    S = B + shift * np.eye(k)
    v = np.ones(k)
    rho = 0.0
    for _ in range(POWER_ITERATION_CAP):
        w = S @ v
        w /= np.max(np.abs(w))
        rho_new = float((w @ (S @ w)) / (w @ w))
        if abs(rho_new - rho) < POWER_ITERATION_TOL:
            return rho_new - shift
        rho = rho_new
        v = w
    return rho - shift


def is_nonsingular_m_matrix(a, entry_tolerance_factor=INVERSE_ENTRY_TOLERANCE_FACTOR,
                            spectral_tolerance=SPECTRAL_TOLERANCE) -> MMatrixEvidence:
    """Test whether a square matrix is a nonsingular M-matrix.

    Three checks: (a) nonpositive off-diagonals; (b) the inverse exists and
    is entrywise nonnegative (authoritative); (c) in A = sI - B with
    s = max diagonal entry, the spectral radius of B stays below s.  The
    row-sum semipositivity witness x = A^-1 * 1 is recorded when available
    but never decides the verdict.
    """
    a = np.asarray(a, dtype=float)
    k = a.shape[0]
    off = a - np.diag(np.diag(a))
    in_z_class = bool(np.all(off <= 0))

    s = float(np.max(np.diag(a))) if k else 0.0
    B = s * np.eye(k) - a
    rho = _spectral_radius_nonneg(np.abs(B))

    inverse = None
    invertible = False
    try:
        inverse = np.linalg.inv(a)
        invertible = bool(np.max(np.abs(a @ inverse - np.eye(k))) < 1e-6)
    except np.linalg.LinAlgError:
        invertible = False

    if invertible:
        min_entry = float(np.min(inverse))
        entry_tol = entry_tolerance_factor * float(np.max(np.abs(inverse)))
        inverse_nonnegative = min_entry >= -entry_tol
    else:
        min_entry = None
        inverse_nonnegative = False

    spectral_ok = invertible and (s >= rho - spectral_tolerance)

    # The two characterizations are equivalent only inside the Z class.
    if (in_z_class and inverse_nonnegative != spectral_ok and invertible
            and abs(s - rho) > 1e-6):
        # Borderline numerics fall through to the conservative AND below; only
        # a clear conflict between the equivalent characterizations is an error.
        raise NumericalDisagreement(
            f"inverse-positivity says {inverse_nonnegative}, spectral test "
            f"says {spectral_ok} (s={s}, rho={rho}, min inverse entry={min_entry})"
        )

    witness = None
    if invertible and inverse_nonnegative:
        x = inverse @ np.ones(k)
        if np.all(x > 0) and np.all(a @ x > 0):
            witness = [float(v) for v in x]

    return MMatrixEvidence(
        is_m_matrix=in_z_class and inverse_nonnegative and spectral_ok,
        in_z_class=in_z_class,
        inverse_nonnegative=inverse_nonnegative,
        min_inverse_entry=min_entry,
        s=s,
        spectral_radius=rho,
        semipositive_witness=witness,
    )


def check_solvability(M: PCMatrix, p: ConceptPartition) -> SolvabilityCertificate:
    """Build the full certificate for a matrix/partition pair.

    The decisive quantity is the inconsistency of the minor restricted to
    the unknowns (a subset of the full matrix's triads, so never larger).
    For r = n-1 the system is the scalar 1 and trivially solvable.
    """
    n, r, k = p.n, p.r, p.k
    kappa_full = koczkodaj_index(M)
    minor = extract_unknown_minor(M, p)
    kappa_minor = koczkodaj_index_or_zero(minor)
    evidence = is_nonsingular_m_matrix(build_system(M, p).a)
    if r == n - 1:
        return SolvabilityCertificate(
            n=n, r=r, k=k, kappa_full=kappa_full, kappa_minor=kappa_minor,
            alpha=1.0 - kappa_minor, bound=None, guaranteed=True,
            scalar_case=True, m_matrix_evidence=evidence,
        )
    bound = theorem_bound(n, r)
    return SolvabilityCertificate(
        n=n, r=r, k=k, kappa_full=kappa_full, kappa_minor=kappa_minor,
        alpha=1.0 - kappa_minor, bound=bound, guaranteed=bool(kappa_minor < bound),
        scalar_case=False, m_matrix_evidence=evidence,
    )
