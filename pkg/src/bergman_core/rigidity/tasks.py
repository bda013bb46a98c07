"""
Celery tasks for batch rigidity runs.
"""
import logging

from celery import shared_task

from bergman_core.algebra.rationals import parse_rational
from bergman_core.kernels.specs import DomainSpec

from .constraints import coefficient_law_row
from .reports import rigidity_report

logger = logging.getLogger(__name__)


@shared_task
def rigidity_report_task(
    spec_data: dict, truncation: int | None = None, precision: str | None = None
):
    """Rigidity report for a serialized DomainSpec, returned as a primitive dict."""
    spec = DomainSpec.from_dict(spec_data)
    report = rigidity_report(spec, truncation=truncation, precision=precision)
    logger.info(
        "Rigidity task finished", extra={"spec": str(spec), "conclusion": report.conclusion}
    )
    return report.to_dict()


@shared_task
def coefficient_law_task(n: int, s: str):
    return coefficient_law_row(n, parse_rational(s)).to_dict()
