"""
Diagonal form of Calabi's local criterion on the fibre slice.

For a radial potential the coefficient matrix of (exp(bD) - 1)/b in the
monomials xi^r is diagonal with entries (N+1) beta(r); an immersion into B^N
needs it positive semidefinite of rank at most N.
"""
import logging
from dataclasses import dataclass

from bergman_core.algebra.multiindex import MultiIndex, lex_multiindices
from bergman_core.core.conf import numerics
from bergman_core.core.exceptions import ParameterOutOfRange

logger = logging.getLogger(__name__)

IMMERSION_IMPOSSIBLE = "immersion_impossible_at_truncation"
CONSISTENT = "consistent_with_immersion"
INCONCLUSIVE = "inconclusive_at_truncation"


def beta_from_alpha(
    alpha, fiber_dim: int, max_degree: int | None = None
) -> dict[MultiIndex, float]:
    """
    beta(r) = alpha(|r|) |r|!/r! over graded-lex multi-indices, with beta(0) = 0.
    """
    max_degree = len(alpha) - 1 if max_degree is None else min(max_degree, len(alpha) - 1)
    beta = {}
    for index in lex_multiindices(fiber_dim, max_degree):
        if index.degree == 0:
            beta[index] = 0.0
            continue
        beta[index] = float(alpha[index.degree]) * index.multinomial
    return beta


@dataclass(frozen=True)
class CalabiDiagnostic:
    entries: tuple[tuple[MultiIndex, float], ...]
    is_psd: bool
    truncated_rank: int
    is_polynomial: bool
    tolerance: float
    N: int
    truncation: int
    detected_cutoff: int | None
    verdict: str

    @property
    def negative_entries(self) -> list[MultiIndex]:
        return [index for index, value in self.entries if value < -self.tolerance]

    def to_dict(self) -> dict:
        return {
            "is_psd": self.is_psd,
            "truncated_rank": self.truncated_rank,
            "is_polynomial": self.is_polynomial,
            "detected_cutoff": self.detected_cutoff,
            "tolerance": self.tolerance,
            "N": self.N,
            "truncation": self.truncation,
            "verdict": self.verdict,
        }


def calabi_diag_test(
    beta: dict[MultiIndex, float],
    N: int,
    tol: float | None = None,
    window: int | None = None,
    min_truncation: int | None = None,
) -> CalabiDiagnostic:
    """
    PSD, rank and polynomiality verdicts on the diagonal entries (N+1) beta(r).

    Every verdict holds at the truncation only: an entry beyond the last
    retained degree can still break positivity or raise the rank.
    """
    config = numerics()
    tol = config["CALABI_TOLERANCE"] if tol is None else tol
    window = window or config["POLYNOMIAL_WINDOW"]
    min_truncation = config["CALABI_MIN_TRUNCATION"] if min_truncation is None else min_truncation

    truncation = max((index.degree for index in beta), default=0)
    if truncation < min_truncation:
        raise ParameterOutOfRange(
            "Calabi diagnostic needs a longer expansion.",
            details={"truncation": truncation, "minimum": min_truncation},
        )

    entries = tuple((index, (N + 1) * value) for index, value in beta.items())
    is_psd = all(value >= -tol for _, value in entries)
    truncated_rank = sum(1 for _, value in entries if value > tol)
    significant = [index.degree for index, value in entries if abs(value) > tol]
    detected_cutoff = max(significant, default=None)
    is_polynomial = detected_cutoff is None or detected_cutoff <= truncation - window

    if not is_psd or truncated_rank > N:
        verdict = IMMERSION_IMPOSSIBLE
    elif is_polynomial:
        verdict = CONSISTENT
    else:
        verdict = INCONCLUSIVE

    logger.debug(
        "Calabi diagnostic",
        extra={
            "N": N,
            "truncation": truncation,
            "truncated_rank": truncated_rank,
            "is_psd": is_psd,
            "verdict": verdict,
        },
    )
    return CalabiDiagnostic(
        entries=entries,
        is_psd=is_psd,
        truncated_rank=truncated_rank,
        is_polynomial=is_polynomial,
        tolerance=tol,
        N=N,
        truncation=truncation,
        detected_cutoff=detected_cutoff,
        verdict=verdict,
    )


def space_form_law(mu, truncation: int, tol: float | None = None) -> CalabiDiagnostic:
    """
    Diagnostic of the pure ball slice 1 - (1 - x)^mu with one fibre variable and
    no rank bound.
    """
    from .expansion import ball_slice_alpha

    beta = beta_from_alpha(ball_slice_alpha(mu, truncation), 1)
    return calabi_diag_test(beta, N=truncation + 1, tol=tol, min_truncation=0)
