"""
Combined rigidity verdict for Hartogs and egg domains over the ball.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from bergman_core.algebra.rationals import format_rational
from bergman_core.calabi.criterion import calabi_diag_test
from bergman_core.calabi.expansion import slice_expansion
from bergman_core.core.conf import numerics
from bergman_core.core.exceptions import BergmanError, ParameterOutOfRange, SchemaViolation
from bergman_core.kernels.hartogs import hartogs_coefficients
from bergman_core.kernels.specs import DomainSpec

from .constraints import check_algebraic_constraints, zero_locus_s
from .reduction import egg_reduced_exponent

logger = logging.getLogger(__name__)

BALL_CERTIFIED = "ball_certified"
OBSTRUCTION_FOUND = "obstruction_found"
INCONCLUSIVE = "inconclusive_at_truncation"
OUTSIDE_SCOPE = "outside_certified_scope"

EXACT_CHECKS = (
    "s_nonzero",
    "top_coeff_nonzero",
    "T2_divides_T1",
    "T2_constant",
    "T2_at_pole",
    "zero_locus_matches",
)


@dataclass(frozen=True)
class RigidityReport:
    """
    Verdict of the rigidity checks.

    ``checks`` maps each exact check to a boolean and ``calabi_verdict`` to
    the diagnostic verdict; ``reduction`` describes the Hartogs domain an egg
    was reduced to.
    """

    domain: DomainSpec
    checks: dict
    conclusion: str
    truncation: int
    tolerances: dict
    polynomials: dict | None = None
    calabi: dict | None = None
    reduction: dict | None = None
    errors: list = field(default_factory=list)

    @property
    def obstruction(self) -> bool:
        return self.conclusion == OBSTRUCTION_FOUND

    def to_dict(self) -> dict:
        data = {
            "spec": self.domain.to_dict(),
            "checks": dict(self.checks),
            "conclusion": self.conclusion,
            "truncation": self.truncation,
            "tolerances": dict(self.tolerances),
        }
        if self.reduction is not None:
            data["reduction"] = self.reduction
        if self.polynomials is not None:
            data["polynomials"] = self.polynomials
        if self.calabi is not None:
            data["calabi"] = self.calabi
        if self.errors:
            data["errors"] = list(self.errors)
        return data


def hartogs_model(spec: DomainSpec) -> tuple[int, int, Fraction, dict | None]:
    """(n, m, s) of the Hartogs domain the checks run on; eggs are reduced first."""
    if spec.kind == "hartogs":
        return spec.n, spec.m, spec.s, None
    if spec.kind == "egg":
        s = egg_reduced_exponent(spec.n, spec.p, spec.k)
        reduction = {
            "n": spec.n + spec.p,
            "m": spec.q,
            "s": format_rational(s),
            "stated_s": format_rational(1 / spec.k),
        }
        return spec.n + spec.p, spec.q, s, reduction
    raise ParameterOutOfRange(
        "Rigidity reports need a Hartogs or egg domain.", details={"domain": spec.kind}
    )


def rigidity_report(
    spec: DomainSpec,
    truncation: int | None = None,
    precision: str | None = None,
    tol: float | None = None,
) -> RigidityReport:
    """
    Run the exact checks and the Calabi diagnostic for ``spec``.

    An egg is first reduced to its Hartogs model. Any failed exact check gives
    ``obstruction_found``; all passing with s = 1/(n+1) gives
    ``ball_certified``. The Calabi verdict is reported alongside and never
    overrides an exact check.
    """
    config = numerics()
    truncation = truncation or config["CALABI_MIN_TRUNCATION"]
    tol = config["CALABI_TOLERANCE"] if tol is None else tol
    tolerances = {"calabi": tol}
    if spec.lam is None or spec.N is None:
        raise SchemaViolation(
            "Rigidity reports need lambda and N.", details={"missing": ["lambda", "N"]}
        )
    n, m, s, reduction = hartogs_model(spec)

    if isinstance(spec.lam, float):
        logger.info("Irrational lambda, no certificate", extra={"spec": str(spec)})
        return RigidityReport(
            domain=spec,
            checks={"lambda_rational": False},
            conclusion=OUTSIDE_SCOPE,
            truncation=truncation,
            tolerances=tolerances,
            reduction=reduction,
        )

    if s == 0:
        return RigidityReport(
            domain=spec,
            checks={"s_nonzero": False},
            conclusion=OBSTRUCTION_FOUND,
            truncation=truncation,
            tolerances=tolerances,
            reduction=reduction,
        )

    coefficients = hartogs_coefficients(n, m, s)
    pair = check_algebraic_constraints(coefficients, n, m, spec.lam, spec.N)
    checks = {
        "s_nonzero": True,
        "top_coeff_nonzero": pair.top_coeff_nonzero,
        "T2_divides_T1": pair.T2_divides_T1,
        "T2_constant": pair.T2_constant,
        "T2_at_pole": pair.pole_value_matches,
        "zero_locus_matches": zero_locus_s(n, s),
    }

    errors = []
    calabi = None
    try:
        expansion = slice_expansion(coefficients, spec.lam, spec.N, truncation, precision)
        diagnostic = calabi_diag_test(expansion.beta(), spec.N, tol)
        checks["calabi_verdict"] = diagnostic.verdict
        calabi = diagnostic.to_dict()
        calabi["precision"] = expansion.precision
    except BergmanError as exc:
        checks["calabi_verdict"] = None
        errors.append({"code": exc.code, "message": exc.detail})
        logger.warning(
            "Calabi diagnostic failed", extra={"spec": str(spec), "code": exc.code}
        )

    if not all(checks[name] for name in EXACT_CHECKS):
        conclusion = OBSTRUCTION_FOUND
    elif s == Fraction(1, n + 1):
        conclusion = BALL_CERTIFIED
    else:
        conclusion = INCONCLUSIVE

    logger.info(
        "Rigidity report",
        extra={"spec": str(spec), "truncation": truncation, "conclusion": conclusion},
    )
    return RigidityReport(
        domain=spec,
        checks=checks,
        conclusion=conclusion,
        truncation=truncation,
        tolerances=tolerances,
        polynomials=pair.to_dict(),
        calabi=calabi,
        reduction=reduction,
        errors=errors,
    )
