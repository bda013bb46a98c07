"""
Error hierarchy and the error envelope written by the command line.
"""
import logging

from django.conf import settings

logger = logging.getLogger(__name__)

EXIT_SUCCESS = 0
EXIT_ERROR = 1
EXIT_OBSTRUCTION = 2


class BergmanError(Exception):
    """
    Base class for every failure the toolkit reports.

    Subclasses set ``default_detail`` and ``default_code``; ``details`` carries
    machine-readable context (offending parameter, tail estimate, ...).
    """

    default_detail = "Computation failed."
    default_code = "bergman_error"
    exit_status = EXIT_ERROR

    def __init__(self, detail: str | None = None, code: str | None = None, details=None):
        self.detail = detail if detail is not None else self.default_detail
        self.code = code if code is not None else self.default_code
        self.details = details
        super().__init__(self.detail)


class SchemaViolation(BergmanError):
    """Raised when a run configuration does not validate."""

    default_detail = "Run configuration does not match the schema."
    default_code = "schema_violation"


class ParameterOutOfRange(BergmanError):
    """Raised when a domain or numerical parameter is outside its admissible range."""

    default_detail = "Parameter is outside its admissible range."
    default_code = "parameter_out_of_range"


class OutsideDomain(BergmanError):
    """Raised when an evaluation point is not in the open domain."""

    default_detail = "Point lies outside the domain."
    default_code = "outside_domain"


class NonInvertibleSeries(BergmanError):
    """Raised for real powers of a series whose constant term does not allow them."""

    default_detail = "Series has no power with this exponent."
    default_code = "non_invertible_series"


class SeriesDivergence(BergmanError):
    """Raised when a truncated series tail exceeds the configured tolerance."""

    default_detail = "Truncated series did not converge."
    default_code = "series_divergence"


class LuQiKengViolation(BergmanError):
    """Raised when an off-diagonal kernel value vanishes."""

    default_detail = "Bergman kernel vanishes at this pair; diastasis is undefined."
    default_code = "lu_qi_keng_zero"


class OrthogonalPair(BergmanError):
    """Raised when projective diastasis is requested for orthogonal vectors."""

    default_detail = "Homogeneous vectors are orthogonal; diastasis is infinite."
    default_code = "orthogonal_pair"


class BasisInconsistency(BergmanError):
    """Raised when a rising-factorial expansion has an impossible constant coefficient."""

    default_detail = "Rising-factorial expansion is inconsistent."
    default_code = "basis_inconsistency"


class IrrationalParameter(BergmanError):
    """Raised when an exact check receives a non-rational parameter."""

    default_detail = "Exact checks require a rational parameter."
    default_code = "irrational_parameter"


class QuadratureNotConverged(BergmanError):
    """Raised when grid refinement or the monomial tail estimate fails."""

    default_detail = "Quadrature did not converge."
    default_code = "quadrature_not_converged"


class OutputNotWritable(BergmanError):
    """Raised when a report cannot be written to its output path."""

    default_detail = "Report could not be written."
    default_code = "output_not_writable"


class PrecisionBudgetExceeded(BergmanError):
    """Raised when a requested truncation exceeds what the precision mode supports."""

    default_detail = "Requested truncation exceeds the precision budget."
    default_code = "precision_budget_exceeded"


def error_payload(exc: BaseException) -> dict:
    """
    Render an exception as the error envelope.

    Known errors keep their code and details; anything else is logged and
    reported as ``internal_error``.
    """
    if isinstance(exc, BergmanError):
        return {"error": {"message": exc.detail, "code": exc.code, "details": exc.details}}

    logger.exception("Unhandled exception", exc_info=exc)

    debug = settings.configured and settings.DEBUG
    return {
        "error": {
            "message": "An unexpected error occurred.",
            "code": "internal_error",
            "details": str(exc) if debug else None,
        }
    }
