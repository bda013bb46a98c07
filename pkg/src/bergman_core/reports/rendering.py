"""
Report envelope and its JSON and CSV renderings.
"""
import csv
import io
from fractions import Fraction

from django.utils import timezone
from rest_framework.renderers import JSONRenderer

from bergman_core import __version__
from bergman_core.algebra.rationals import format_rational
from bergman_core.core.conf import numerics

CSV_HEADER = ("index", "value_exact", "value_decimal")


def build_report(
    spec: dict,
    result: dict,
    checks: dict,
    truncation: int | None,
    tolerances: dict,
    config: dict,
    timestamp: bool = True,
) -> dict:
    """The report object with its stable top-level key order."""
    provenance = {"version": __version__, "config": config}
    if timestamp and numerics()["REPORT_TIMESTAMPS"]:
        provenance["timestamp"] = timezone.now().isoformat()
    return {
        "spec": spec,
        "result": result,
        "checks": checks,
        "truncation": truncation,
        "tolerances": tolerances,
        "provenance": provenance,
    }


def render_json(data: dict) -> bytes:
    return JSONRenderer().render(data, renderer_context={"indent": 2})


def exact_term(coefficient: Fraction, v: int) -> str:
    """alpha(v) as "r*C^v" from its rational part r = alpha(v)/C^v."""
    if coefficient == 0 or v == 0:
        return format_rational(coefficient)
    power = "C" if v == 1 else f"C^{v}"
    return f"{format_rational(coefficient)}*{power}"


def coefficient_rows(exact_alpha, alpha) -> list[tuple[int, str, str]]:
    return [
        (v, exact_term(r, v), f"{float(a):.17g}")
        for v, (r, a) in enumerate(zip(exact_alpha, alpha))
    ]


def render_csv(rows) -> bytes:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(rows)
    return buffer.getvalue().encode()
