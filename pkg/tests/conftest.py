"""Shared fixtures and random-instance generators.

Random reciprocal matrices are produced by perturbing a consistent matrix
built from log-uniform weights: each upper-triangular entry is multiplied by
exp(eps) with eps uniform in [-delta, delta] and mirrored reciprocally, so
reciprocity holds by construction.  delta is calibrated by bisection so the
unknown-minor inconsistency lands below a target value.
"""

import math
from pathlib import Path

import numpy as np
import pytest

from hre.pcmatrix import (
    ConceptPartition,
    PCMatrix,
    extract_unknown_minor,
    koczkodaj_index_or_zero,
)

DATA_DIR = Path(__file__).parent / "data"


def weights_log_uniform(rng, n, low=1 / 9, high=9):
    return np.exp(rng.uniform(math.log(low), math.log(high), size=n))


def consistent_matrix(weights) -> np.ndarray:
    w = np.asarray(weights, dtype=float)
    m = w[:, None] / w[None, :]
    np.fill_diagonal(m, 1.0)
    return m


def mirror_reciprocal(upper: np.ndarray) -> np.ndarray:
    """Copy the strict upper triangle over the lower as exact reciprocals."""
    m = upper.copy()
    n = m.shape[0]
    for i in range(n):
        m[i, i] = 1.0
        for j in range(i + 1, n):
            m[j, i] = 1.0 / m[i, j]
    return m


def perturbed_matrix(weights, eps_pattern, delta) -> np.ndarray:
    """Consistent matrix with upper-triangular entries scaled by exp(delta*eps)."""
    m = consistent_matrix(weights)
    n = m.shape[0]
    for i in range(n):
        for j in range(i + 1, n):
            m[i, j] *= math.exp(delta * eps_pattern[i, j])
    return mirror_reciprocal(m)


def random_partition(rng, n, r):
    labels = tuple(f"c{i+1}" for i in range(n))
    known_idx = sorted(rng.choice(n, size=r, replace=False))
    unknown = tuple(i for i in range(n) if i not in known_idx)
    known_values = {int(i): float(np.exp(rng.uniform(-1, 1))) for i in known_idx}
    return ConceptPartition(concept_labels=labels, unknown_indices=unknown,
                            known_values=known_values)


def minor_kappa(m: np.ndarray, p: ConceptPartition) -> float:
    M = PCMatrix(entries=np.array(m))
    return koczkodaj_index_or_zero(extract_unknown_minor(M, p))


def calibrated_instance(rng, n, r, kappa_target):
    """(PCMatrix, partition) with unknown-minor inconsistency <= kappa_target.

    Bisects the perturbation scale on a fixed direction pattern; the minor's
    index grows monotonically enough in the scale for bisection to land a
    value in (0.5 * kappa_target, kappa_target] unless the target is tiny.
    """
    weights = weights_log_uniform(rng, n)
    eps = rng.uniform(-1, 1, size=(n, n))
    p = random_partition(rng, n, r)
    lo, hi = 0.0, 2.0
    for _ in range(40):
        mid = (lo + hi) / 2
        if minor_kappa(perturbed_matrix(weights, eps, mid), p) <= kappa_target:
            lo = mid
        else:
            hi = mid
    m = perturbed_matrix(weights, eps, lo)
    assert minor_kappa(m, p) <= kappa_target
    return PCMatrix(entries=m), p


def guaranteed_instance(rng, n, r, frac=0.8):
    """Random instance whose minor inconsistency sits below the solvability
    bound (scaled by frac), so the M-matrix guarantee applies."""
    from hre.solvability import theorem_bound

    target = frac * (theorem_bound(n, r) if r <= n - 2 else 1.0)
    return calibrated_instance(rng, n, r, target)


@pytest.fixture
def worked3():
    """The 3x3 consistent instance from weights (2, 4, 1), reference c3 = 1."""
    m = consistent_matrix([2.0, 4.0, 1.0])
    p = ConceptPartition(concept_labels=("a", "b", "c"),
                         unknown_indices=(0, 1), known_values={2: 1.0})
    return PCMatrix(entries=m), p


INFEASIBLE4 = [
    [1.0, 1 / 9, 1 / 3, 1 / 9],
    [9.0, 1.0, 1 / 9, 1 / 9],
    [3.0, 9.0, 1.0, 1 / 9],
    [9.0, 9.0, 9.0, 1.0],
]

_S = 2.0 + math.sqrt(5.0)
SINGULAR4 = [
    [1.0, _S, 1.0, 1.0],
    [1.0 / _S, 1.0, _S, 1.0],
    [1.0, 1.0 / _S, 1.0, 1.0],
    [1.0, 1.0, 1.0, 1.0],
]


def partition4():
    return ConceptPartition(concept_labels=("a", "b", "c", "d"),
                            unknown_indices=(0, 1, 2), known_values={3: 1.0})
