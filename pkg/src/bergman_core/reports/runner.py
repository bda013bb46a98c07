"""
Dispatch of a validated RunConfig to the computation it names.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from bergman_core.algebra.rationals import format_rational
from bergman_core.calabi.criterion import calabi_diag_test
from bergman_core.calabi.expansion import exact_slice_alpha, slice_expansion
from bergman_core.core.conf import numerics
from bergman_core.core.exceptions import (
    EXIT_ERROR,
    EXIT_OBSTRUCTION,
    EXIT_SUCCESS,
    BergmanError,
    OutputNotWritable,
    error_payload,
)
from bergman_core.diastasis.functions import DiastasisValue, bergman_diastasis
from bergman_core.kernels.evaluation import evaluate_kernel, kernel_function, origin_annotation
from bergman_core.kernels.hartogs import hartogs_coefficients
from bergman_core.oracle.kernel import compare_with_closed_form
from bergman_core.oracle.quadrature import QuadratureSpec
from bergman_core.oracle.taylor import taylor_slice_alpha
from bergman_core.rigidity.reports import hartogs_model, rigidity_report

from .config import RunConfig
from .rendering import build_report, coefficient_rows, render_csv, render_json

logger = logging.getLogger(__name__)

ALPHA_ORACLE_TRUNCATION = 10


@dataclass
class Outcome:
    result: dict
    checks: dict = field(default_factory=dict)
    truncation: int | None = None
    tolerances: dict = field(default_factory=dict)
    obstruction: bool = False
    rows: list | None = None


@dataclass(frozen=True)
class RunResult:
    exit_status: int
    report: dict
    content: bytes
    error: bool = False


def _number(value) -> str | float:
    if isinstance(value, Fraction):
        return format_rational(value)
    return float(value)


def _kernel_options(config: RunConfig) -> dict:
    tolerance = config.tolerance("series")
    return {} if tolerance is None else {"tolerance": tolerance}


def run_kernel(config: RunConfig) -> Outcome:
    spec = config.spec
    z = config.points[0]
    w = config.points[1] if len(config.points) == 2 else z
    value = complex(evaluate_kernel(spec, z, w, **_kernel_options(config)))
    result = {
        "value": {"real": value.real, "imag": value.imag},
        "decimal": f"{value.real:.15g}" if value.imag == 0 else str(value),
        "normalization": "unit_volume" if spec.kind == "egg" else "lebesgue",
    }
    if not any(z) and not any(w):
        result["exact_form"] = origin_annotation(spec)
    return Outcome(result=result, tolerances=dict(config.tolerances))


def run_diastasis(config: RunConfig) -> Outcome:
    spec = config.spec
    z, w = config.points
    kernel = kernel_function(spec, **_kernel_options(config))
    value = DiastasisValue(bergman_diastasis(kernel, z, w))
    if spec.lam is not None:
        value = value.rescaled(spec.lam)
    result = {"value": value.value, "scale": _number(value.scale), "scaled": value.scaled}
    return Outcome(result=result, tolerances=dict(config.tolerances))


def run_calabi(config: RunConfig) -> Outcome:
    spec = config.spec
    settings = numerics()
    truncation = config.truncation or settings["CALABI_MIN_TRUNCATION"]
    tol = config.tolerance("calabi", settings["CALABI_TOLERANCE"])
    n, m, s, reduction = hartogs_model(spec)
    coefficients = hartogs_coefficients(n, m, s)
    expansion = slice_expansion(coefficients, spec.lam, spec.N, truncation, config.precision)
    diagnostic = calabi_diag_test(expansion.beta(), spec.N, tol)

    result = {
        "C": expansion.C,
        "mu": _number(expansion.mu),
        "exponent_ratio": _number(expansion.exponent_ratio),
        "precision": expansion.precision,
        "alpha": [float(a) for a in expansion.alpha],
        "diagnostic": diagnostic.to_dict(),
    }
    if reduction is not None:
        result["reduction"] = reduction
    rows = None
    if config.format == "csv":
        exact = expansion.exact_alpha or exact_slice_alpha(
            coefficients, spec.lam, spec.N, truncation
        )
        rows = coefficient_rows(exact, expansion.alpha)
    checks = {
        "is_psd": diagnostic.is_psd,
        "truncated_rank": diagnostic.truncated_rank,
        "is_polynomial": diagnostic.is_polynomial,
        "verdict": diagnostic.verdict,
    }
    return Outcome(
        result=result, checks=checks, truncation=truncation, tolerances={"calabi": tol}, rows=rows
    )


def run_rigidity(config: RunConfig) -> Outcome:
    report = rigidity_report(
        config.spec,
        truncation=config.truncation,
        precision=config.precision,
        tol=config.tolerance("calabi"),
    )
    data = report.to_dict()
    result = {
        key: value
        for key, value in data.items()
        if key not in ("spec", "checks", "truncation", "tolerances")
    }
    return Outcome(
        result=result,
        checks=data["checks"],
        truncation=report.truncation,
        tolerances=data["tolerances"],
        obstruction=report.obstruction,
    )


def run_oracle_compare(config: RunConfig) -> Outcome:
    spec = config.spec
    quad = QuadratureSpec.from_settings(
        degree_cutoff=config.truncation, refinement_tolerance=config.tolerance("refinement")
    )
    tail = config.tolerance("tail", numerics()["ORACLE_TAIL_TOLERANCE"])
    comparison = compare_with_closed_form(
        spec, config.samples or 20, np.random.default_rng(0), quad, tail
    )
    result = {key: value for key, value in comparison.to_dict().items() if key != "spec"}
    if spec.kind == "hartogs" and spec.lam is not None and spec.N is not None:
        coefficients = hartogs_coefficients(spec.n, spec.m, spec.s)
        series = slice_expansion(
            coefficients, spec.lam, spec.N, ALPHA_ORACLE_TRUNCATION, config.precision
        ).alpha
        taylor = taylor_slice_alpha(coefficients, spec.lam, spec.N, ALPHA_ORACLE_TRUNCATION)
        result["alpha_oracle"] = {
            "truncation": ALPHA_ORACLE_TRUNCATION,
            "max_deviation": max(abs(float(a) - b) for a, b in zip(series, taylor)),
        }
    return Outcome(
        result=result,
        truncation=quad.degree_cutoff,
        tolerances={
            "refinement": quad.refinement_tolerance,
            "tail": tail,
        },
    )


HANDLERS = {
    "kernel": run_kernel,
    "diastasis": run_diastasis,
    "calabi": run_calabi,
    "rigidity": run_rigidity,
    "oracle-compare": run_oracle_compare,
}


def write_output(path: str, content: bytes) -> None:
    try:
        Path(path).write_bytes(content)
    except OSError as exc:
        raise OutputNotWritable(
            f"Cannot write report to {path}.", details={"output": path, "reason": exc.strerror}
        ) from exc


def run(config: RunConfig) -> RunResult:
    """
    Execute ``config`` and write its report.

    Exit status is 0 on success, 2 when a rigidity check finds an obstruction
    and 1 on any error; errors come back as the error envelope.
    """
    try:
        outcome = HANDLERS[config.command](config)
        report = build_report(
            spec=config.spec.to_dict(),
            result=outcome.result,
            checks=outcome.checks,
            truncation=outcome.truncation,
            tolerances=outcome.tolerances,
            config=config.to_dict(),
            timestamp=config.timestamp,
        )
        content = render_csv(outcome.rows) if outcome.rows is not None else render_json(report)
        if config.output:
            write_output(config.output, content)
    except Exception as exc:
        payload = error_payload(exc)
        status = exc.exit_status if isinstance(exc, BergmanError) else EXIT_ERROR
        logger.info(
            "Run failed",
            extra={"command": config.command, "code": payload["error"]["code"]},
        )
        return RunResult(
            exit_status=status, report=payload, content=render_json(payload), error=True
        )

    status = EXIT_OBSTRUCTION if outcome.obstruction else EXIT_SUCCESS
    return RunResult(exit_status=status, report=report, content=content)
