"""Construction and solution of the HRE linear system A*mu = b.

Each unknown concept's utility is modelled as the arithmetic mean of all
other utilities weighted by the judgment ratios:

    mu(c_j) = 1/(n-1) * sum_{i != j} m_ji * mu(c_i)

Moving the unknown terms to the left yields a k x k system with unit
diagonal, strictly negative off-diagonal entries -m_ji/(n-1), and a
strictly positive right-hand side collecting the reference utilities.
The divisor is always n-1 (total concept count minus one), not k-1.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InfeasibleSolution, NonConvergence, SingularSystem
from .pcmatrix import ConceptPartition, PCMatrix

SINGULARITY_TOLERANCE_FACTOR = 1e-12
POSITIVITY_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class HreSystem:
    """The k x k matrix A and constant vector b, plus the unknown ordering."""

    a: np.ndarray
    b: np.ndarray
    unknown_order: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Ranking:
    """Strictly positive utility assignment over all concepts.

    Known concepts retain exactly their input values; diagnostics carry the
    solver residual (max-norm of A*mu - b) and a condition estimate of A.
    """

    values: dict[str, float]
    method: str
    residual: float
    condition_estimate: float


def build_system(M: PCMatrix, p: ConceptPartition) -> HreSystem:
    """Assemble A and b from the judgment matrix and the partition."""
    n = M.size
    m = M.entries
    unknowns = p.unknown_indices
    known = sorted(p.known_values)
    k = len(unknowns)
    a = np.eye(k)
    b = np.zeros(k)
    for row, u in enumerate(unknowns):
        for col, v in enumerate(unknowns):
            if row != col:
                a[row, col] = -m[u, v] / (n - 1)
        b[row] = sum(m[u, i] * p.known_values[i] for i in known) / (n - 1)
    return HreSystem(a=a, b=b, unknown_order=tuple(unknowns))


def solve_system(s: HreSystem) -> np.ndarray:
    """Solve A*mu = b by Gaussian elimination with partial row pivoting.

    Raises SingularSystem when a pivot falls below
    SINGULARITY_TOLERANCE_FACTOR * max|A|: the M-matrix guarantee does not
    apply and no unique solution exists.
    """
    a = s.a.astype(float).copy()
    b = s.b.astype(float).copy()
    k = len(b)
    tol = SINGULARITY_TOLERANCE_FACTOR * np.max(np.abs(a))
    for col in range(k):
        pivot_row = col + int(np.argmax(np.abs(a[col:, col])))
        if abs(a[pivot_row, col]) <= tol:
            raise SingularSystem(
                f"pivot {a[pivot_row, col]:.3e} below tolerance {tol:.3e} "
                f"at column {col}"
            )
        if pivot_row != col:
            a[[col, pivot_row]] = a[[pivot_row, col]]
            b[[col, pivot_row]] = b[[pivot_row, col]]
        for row in range(col + 1, k):
            factor = a[row, col] / a[col, col]
            if factor != 0.0:
                a[row, col:] -= factor * a[col, col:]
                b[row] -= factor * b[col]
    x = np.zeros(k)
    for row in range(k - 1, -1, -1):
        x[row] = (b[row] - a[row, row + 1:] @ x[row + 1:]) / a[row, row]
    return x


def rank_hre(M: PCMatrix, p: ConceptPartition,
             positivity_tolerance=POSITIVITY_TOLERANCE) -> Ranking:
    """Full pipeline: build the system, solve it, merge with known values.

    Raises InfeasibleSolution when any solved utility is not strictly
    positive (possible when the minor's inconsistency exceeds the
    solvability bound); values are never clamped.
    """
    system = build_system(M, p)
    mu_u = solve_system(system)
    if np.any(mu_u <= positivity_tolerance):
        raise InfeasibleSolution(list(mu_u))
    residual = float(np.max(np.abs(system.a @ mu_u - system.b)))
    condition = float(np.linalg.cond(system.a))
    values = {}
    solved = dict(zip(system.unknown_order, mu_u))
    for i, label in enumerate(p.concept_labels):
        if i in p.known_values:
            values[label] = p.known_values[i]
        else:
            values[label] = float(solved[i])
    return Ranking(values=values, method="hre",
                   residual=residual, condition_estimate=condition)


def fixed_point_oracle(M: PCMatrix, p: ConceptPartition, initial=None,
                       max_iters=10000, tol=1e-12) -> np.ndarray:
    """Iterate the weighted-mean heuristic directly over the unknowns.

    Fixed points coincide with solutions of A*mu = b; used in tests as an
    independent check on the direct solver.  Known values stay fixed.
    """
    n = M.size
    m = M.entries
    unknowns = p.unknown_indices
    k = len(unknowns)
    mu = np.ones(n)
    for i, v in p.known_values.items():
        mu[i] = v
    if initial is not None:
        initial = np.asarray(initial, dtype=float)
        if initial.shape != (k,) or np.any(initial <= 0):
            raise ValueError("initial must be a strictly positive length-k vector")
        for idx, u in enumerate(unknowns):
            mu[u] = initial[idx]
    for _ in range(max_iters):
        new = mu.copy()
        for u in unknowns:
            total = m[u, :] @ mu - m[u, u] * mu[u]
            new[u] = total / (n - 1)
        delta = np.max(np.abs(new[list(unknowns)] - mu[list(unknowns)]))
        mu = new
        if delta < tol:
            return mu[list(unknowns)]
    raise NonConvergence(f"fixed-point iteration did not converge in {max_iters} steps")
