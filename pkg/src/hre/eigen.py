"""Principal-eigenvector ranking baseline and ranking comparison.

The classic priority-deriving method: the Perron eigenvector of the positive
judgment matrix, rescaled to sum 1.  Kept alongside the HRE solver so both
methods can be reported side by side on the same input.
"""

from dataclasses import dataclass

import numpy as np
from scipy.stats import kendalltau

from .errors import LabelMismatch, NonConvergence
from .pcmatrix import PCMatrix
from .solver import Ranking


@dataclass(frozen=True, eq=False)
class EigenRanking:
    """Normalized principal eigenvector plus the dominant eigenvalue estimate."""

    values: dict[str, float]
    dominant_eigenvalue: float
    iterations: int


def principal_eigenvector(M: PCMatrix, labels, tol=1e-12, max_iters=100000) -> EigenRanking:
    """Power iteration from the all-ones vector, normalized to entry sum 1.

    The matrix is strictly positive, so the dominant eigenpair is simple and
    strictly positive; the eigenvalue is estimated from the component-wise
    ratios at the fixed point.
    """
    m = M.entries
    n = M.size
    if len(labels) != n:
        raise LabelMismatch(f"expected {n} labels, got {len(labels)}")
    v = np.ones(n) / n
    for it in range(1, max_iters + 1):
        w = m @ v
        w /= w.sum()
        if np.max(np.abs(w - v)) < tol:
            v = w
            lam = float(np.mean((m @ v) / v))
            return EigenRanking(
                values={lab: float(x) for lab, x in zip(labels, v)},
                dominant_eigenvalue=lam,
                iterations=it,
            )
        v = w
    raise NonConvergence(f"power iteration did not converge in {max_iters} steps")


def compare_rankings(hre: Ranking, ev: EigenRanking) -> dict:
    """Side-by-side report: orderings, Kendall tau, and rescaled value ratios.

    HRE values are rescaled to sum 1 for comparability with the normalized
    eigenvector; the raw HRE values are reported untouched.
    """
    if set(hre.values) != set(ev.values):
        raise LabelMismatch(
            f"label sets differ: {sorted(hre.values)} vs {sorted(ev.values)}"
        )
    labels = list(hre.values)
    hre_vals = np.array([hre.values[lab] for lab in labels])
    ev_vals = np.array([ev.values[lab] for lab in labels])
    hre_scaled = hre_vals / hre_vals.sum()
    tau = kendalltau(hre_vals, ev_vals).statistic
    if tau != tau:  # all-tied input: identical (constant) orderings agree
        tau = 1.0
    order_hre = sorted(labels, key=lambda lab: -hre.values[lab])
    order_ev = sorted(labels, key=lambda lab: -ev.values[lab])
    return {
        "labels": labels,
        "hre": {lab: float(v) for lab, v in zip(labels, hre_vals)},
        "hre_rescaled": {lab: float(v) for lab, v in zip(labels, hre_scaled)},
        "eigenvector": {lab: float(v) for lab, v in zip(labels, ev_vals)},
        "order_hre": order_hre,
        "order_eigenvector": order_ev,
        "kendall_tau": float(tau),
        "value_ratio": {
            lab: float(h / e) for lab, h, e in zip(labels, hre_scaled, ev_vals)
        },
        "dominant_eigenvalue": ev.dominant_eigenvalue,
    }
