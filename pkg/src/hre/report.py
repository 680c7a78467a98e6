"""Report assembly shared by the CLI and the HTTP service.

Reports copy engine outputs verbatim (no recomputation) into plain dicts
with a fixed field order, ready for canonical JSON rendering or text
formatting.
"""

from .eigen import compare_rankings, principal_eigenvector
from .errors import InfeasibleSolution, SingularSystem
from .pcmatrix import ConceptPartition, PCMatrix, worst_triad
from .solvability import SolvabilityCertificate, check_solvability
from .solver import rank_hre


def _triad_dict(M: PCMatrix, labels):
    triad = worst_triad(M)
    if triad is None:
        return None
    i, j, k = triad.indices
    return {
        "indices": [i, j, k],
        "labels": [labels[i], labels[j], labels[k]],
        "kappa": triad.kappa,
    }


def certificate_dict(cert: SolvabilityCertificate) -> dict:
    ev = cert.m_matrix_evidence
    return {
        "n": cert.n,
        "r": cert.r,
        "k": cert.k,
        "kappa": cert.kappa_full,
        "kappa_minor": cert.kappa_minor,
        "alpha": cert.alpha,
        "bound": cert.bound,
        "guaranteed": cert.guaranteed,
        "scalar_case": cert.scalar_case,
        "m_matrix_evidence": {
            "is_m_matrix": ev.is_m_matrix,
            "in_z_class": ev.in_z_class,
            "inverse_nonnegative": ev.inverse_nonnegative,
            "min_inverse_entry": ev.min_inverse_entry,
            "s": ev.s,
            "spectral_radius": ev.spectral_radius,
            "semipositive_witness": ev.semipositive_witness,
        },
    }


def build_rank_report(M: PCMatrix, p: ConceptPartition) -> dict:
    """Run the solvability check and the HRE pipeline; never raises on
    singular/infeasible systems, those land in the report's "error" slot."""
    labels = list(p.concept_labels)
    cert = check_solvability(M, p)
    report = {
        "n": p.n,
        "k": p.k,
        "r": p.r,
        "labels": labels,
        "known": {labels[i]: v for i, v in sorted(p.known_values.items())},
        "kappa": cert.kappa_full,
        "kappa_minor": cert.kappa_minor,
        "bound": cert.bound,
        "guaranteed": cert.guaranteed,
        "scalar_case": cert.scalar_case,
        "worst_triad": _triad_dict(M, labels),
        "ranking": None,
        "diagnostics": None,
        "error": None,
    }
    try:
        ranking = rank_hre(M, p)
    except SingularSystem as exc:
        report["error"] = {"kind": "singular", "detail": str(exc)}
    except InfeasibleSolution as exc:
        report["error"] = {"kind": "infeasible", "detail": str(exc)}
    else:
        report["ranking"] = {lab: ranking.values[lab] for lab in labels}
        report["diagnostics"] = {
            "residual": ranking.residual,
            "condition_estimate": ranking.condition_estimate,
        }
    return report


def build_check_report(M: PCMatrix, p: ConceptPartition) -> dict:
    cert = check_solvability(M, p)
    out = certificate_dict(cert)
    out["worst_triad"] = _triad_dict(M, list(p.concept_labels))
    return out


def build_compare_report(M: PCMatrix, p: ConceptPartition) -> dict:
    """Both rankings with per-method error slots; methods fail independently."""
    labels = list(p.concept_labels)
    out = {"labels": labels, "hre_error": None, "eigenvector_error": None,
           "comparison": None}
    hre_ranking = None
    try:
        hre_ranking = rank_hre(M, p)
    except SingularSystem as exc:
        out["hre_error"] = {"kind": "singular", "detail": str(exc)}
    except InfeasibleSolution as exc:
        out["hre_error"] = {"kind": "infeasible", "detail": str(exc)}
    ev_ranking = principal_eigenvector(M, labels)
    out["eigenvector"] = {lab: ev_ranking.values[lab] for lab in labels}
    out["dominant_eigenvalue"] = ev_ranking.dominant_eigenvalue
    if hre_ranking is not None:
        out["hre"] = {lab: hre_ranking.values[lab] for lab in labels}
        out["comparison"] = compare_rankings(hre_ranking, ev_ranking)
    return out
