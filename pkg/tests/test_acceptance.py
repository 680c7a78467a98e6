"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion lines.
"""

import itertools
import time

import numpy as np

from hre.eigen import principal_eigenvector
from hre.pcmatrix import (
    ConceptPartition,
    extract_unknown_minor,
    koczkodaj_index,
    validate_pc_matrix,
)
from hre.solvability import (
    bound_table,
    check_solvability,
    is_nonsingular_m_matrix,
    linear_bound,
    theorem_bound,
    truncate_bound,
)
from hre.solver import build_system, fixed_point_oracle, rank_hre, solve_system

from conftest import (
    calibrated_instance,
    consistent_matrix,
    guaranteed_instance,
    mirror_reciprocal,
    random_partition,
    weights_log_uniform,
)

TABLE1 = {
    (3, 1): 0.5,
    (4, 1): 0.232, (4, 2): 0.666,
    (5, 1): 0.156, (5, 2): 0.359, (5, 3): 0.75,
    (6, 1): 0.118, (6, 2): 0.259, (6, 3): 0.441, (6, 4): 0.8,
    (7, 1): 0.095, (7, 2): 0.204, (7, 3): 0.333, (7, 4): 0.5, (7, 5): 0.833,
}


def _report(name, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] {name}"
    if detail:
        line += f"  ({detail})"
    print(line)
    assert ok, line


def test_table1_reproduction():
    bound_table(7)  # warm-up outside the timed region
    start = time.perf_counter()
    table = bound_table(7)
    elapsed = time.perf_counter() - start
    mismatches = [
        (n, r) for (n, r), expected in TABLE1.items()
        if abs(truncate_bound(table[n][r]) - expected) > 5e-4
    ]
    _report("Table 1 reproduction (15 entries, <1 ms)",
            not mismatches and elapsed < 1e-3,
            f"elapsed={elapsed*1e3:.3f} ms, mismatches={mismatches}")


def test_consistent_recovery():
    rng = np.random.default_rng(101)
    start = time.perf_counter()
    failures = []
    for n in range(3, 9):
        w = weights_log_uniform(rng, n)
        M = validate_pc_matrix(consistent_matrix(w))
        labels = tuple(f"c{i}" for i in range(n))
        if n <= 6:
            partitions = [
                known_set
                for r in range(1, n - 1)
                for known_set in itertools.combinations(range(n), r)
            ]
        else:
            partitions = []
            for _ in range(50):
                r = int(rng.integers(1, n - 1))
                partitions.append(tuple(sorted(
                    int(i) for i in rng.choice(n, size=r, replace=False))))
        for known_set in partitions:
            p = ConceptPartition(
                concept_labels=labels,
                unknown_indices=tuple(i for i in range(n) if i not in known_set),
                known_values={i: float(w[i]) for i in known_set},
            )
            ranking = rank_hre(M, p)
            for i, lab in enumerate(labels):
                if abs(ranking.values[lab] - w[i]) > 1e-10 * abs(w[i]):
                    failures.append((n, known_set, lab))
            if not check_solvability(M, p).guaranteed:
                failures.append((n, known_set, "not guaranteed"))
    elapsed = time.perf_counter() - start
    _report("Consistent recovery sweep (n=3..8, <5 s)",
            not failures and elapsed < 5.0,
            f"elapsed={elapsed:.2f} s, failures={failures[:3]}")


def test_sufficiency_sweep():
    rng = np.random.default_rng(103)
    start = time.perf_counter()
    failures = 0
    for _ in range(1000):
        n = int(rng.integers(3, 8))
        r = int(rng.integers(1, n - 1))
        target = float(rng.uniform(0.2, 0.95)) * theorem_bound(n, r)
        M, p = calibrated_instance(rng, n, r, target)
        evidence = is_nonsingular_m_matrix(build_system(M, p).a)
        if not evidence.is_m_matrix:
            failures += 1
            continue
        ranking = rank_hre(M, p)
        if any(v <= 0 for v in ranking.values.values()):
            failures += 1
    elapsed = time.perf_counter() - start
    _report("Sufficiency sweep (1000 instances below bound, <30 s)",
            failures == 0 and elapsed < 30.0,
            f"elapsed={elapsed:.2f} s, failures={failures}")


def test_minor_monotonicity():
    rng = np.random.default_rng(107)
    violations = 0
    done = 0
    while done < 1000:
        n = int(rng.integers(4, 8))
        r = int(rng.integers(1, n - 2))
        upper = np.exp(rng.uniform(-2, 2, size=(n, n)))
        M = validate_pc_matrix(mirror_reciprocal(upper))
        p = random_partition(rng, n, r)
        if p.k < 3:
            continue
        done += 1
        if koczkodaj_index(extract_unknown_minor(M, p)) > koczkodaj_index(M) + 1e-14:
            violations += 1
    _report("Minor monotonicity (1000 instances, k >= 3)",
            violations == 0, f"violations={violations}")


def test_case_a_equality_and_dominance():
    bad_equal = [n for n in range(3, 201)
                 if abs(theorem_bound(n, n - 2) - linear_bound(n, n - 2)) > 1e-12]
    bad_strict = [(n, r) for n in range(4, 201) for r in range(1, n - 2)
                  if not theorem_bound(n, r) < linear_bound(n, r)]
    _report("Case (a) equality at r=n-2 and strict dominance below",
            not bad_equal and not bad_strict,
            f"equality failures={bad_equal[:3]}, strict failures={bad_strict[:3]}")


def test_bound_positivity():
    bad = [(n, r) for n in range(3, 201) for r in range(1, n - 1)
           if not theorem_bound(n, r) > 0]
    _report("Bound positivity over n=3..200", not bad, f"failures={bad[:3]}")


def test_oracle_equivalence():
    rng = np.random.default_rng(109)
    worst = 0.0
    for _ in range(500):
        n = int(rng.integers(3, 8))
        r = int(rng.integers(1, n - 1))
        M, p = guaranteed_instance(rng, n, r)
        direct = solve_system(build_system(M, p))
        iterated = fixed_point_oracle(M, p)
        worst = max(worst, float(np.max(np.abs(direct - iterated))))
    _report("Oracle equivalence (500 instances, 1e-8 max-norm)",
            worst < 1e-8, f"worst deviation={worst:.2e}")


def test_evidence_coherence():
    # Singular system rejected by both characterizations.
    singular = is_nonsingular_m_matrix(np.array([[1.0, -1.0], [-1.0, 1.0]]))
    coherent = (not singular.inverse_nonnegative
                and not singular.is_m_matrix
                and abs(singular.spectral_radius - singular.s) < 1e-9)
    # Mixed random instances: NumericalDisagreement would raise on conflict.
    rng = np.random.default_rng(113)
    for _ in range(300):
        n = int(rng.integers(3, 8))
        r = int(rng.integers(1, n - 1))
        M, p = calibrated_instance(rng, n, r, float(rng.uniform(0.05, 0.95)))
        is_nonsingular_m_matrix(build_system(M, p).a)
    _report("M-matrix evidence coherence (inverse vs spectral)", coherent)


def test_eigenvector_baseline():
    rng = np.random.default_rng(127)
    worst_value = 0.0
    worst_lambda = 0.0
    for _ in range(50):
        n = int(rng.integers(3, 8))
        w = weights_log_uniform(rng, n)
        M = validate_pc_matrix(consistent_matrix(w))
        ev = principal_eigenvector(M, [f"c{i}" for i in range(n)])
        expected = w / w.sum()
        got = np.array([ev.values[f"c{i}"] for i in range(n)])
        worst_value = max(worst_value, float(np.max(np.abs(got - expected))))
        worst_lambda = max(worst_lambda, abs(ev.dominant_eigenvalue - n))
    _report("Eigenvector baseline on consistent matrices",
            worst_value < 1e-9 and worst_lambda < 1e-9,
            f"max value err={worst_value:.2e}, max lambda err={worst_lambda:.2e}")
