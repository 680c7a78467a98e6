"""Exception taxonomy for the HRE ranking engine.

Every error raised by the engine derives from HreError so callers (CLI,
HTTP service) can map outcomes to exit codes / HTTP statuses in one place.
"""


class HreError(Exception):
    """Base class for all engine errors."""


class InputError(HreError):
    """Malformed input file or document (not a judgment-matrix violation)."""


class ValidationError(HreError):
    """A pairwise comparison matrix violates one of its invariants."""


class NotSquare(ValidationError):
    pass


class NonPositiveEntry(ValidationError):
    def __init__(self, i, j, value):
        self.index = (i, j)
        self.value = value
        super().__init__(f"entry ({i},{j}) = {value} must be strictly positive")


class NonUnitDiagonal(ValidationError):
    def __init__(self, i, value):
        self.index = i
        self.value = value
        super().__init__(f"diagonal entry ({i},{i}) = {value} must equal 1 exactly")


class ReciprocityViolation(ValidationError):
    def __init__(self, i, j, residual):
        self.index = (i, j)
        self.residual = residual
        super().__init__(
            f"reciprocity violated at ({i},{j}): |m_ij*m_ji - 1| = {residual}"
        )


class TooSmall(HreError):
    """The inconsistency index is undefined for matrices smaller than 3x3."""


class DomainError(HreError):
    """(n, r) outside the range covered by the solvability bound."""


class SingularSystem(HreError):
    """The HRE system matrix is singular or numerically near-singular."""


class InfeasibleSolution(HreError):
    """The system solved but some ranking value is not strictly positive."""

    def __init__(self, values):
        self.values = [float(v) for v in values]
        super().__init__(
            "solved ranking contains non-positive values: "
            + ", ".join(f"{v:.6g}" for v in values)
        )


class NonConvergence(HreError):
    """Iterative procedure failed to converge within its iteration budget."""


class NumericalDisagreement(HreError):
    """Inverse-positivity and spectral M-matrix checks disagree beyond tolerance."""


class LabelMismatch(HreError):
    """Two rankings to be compared do not share the same concept set."""
