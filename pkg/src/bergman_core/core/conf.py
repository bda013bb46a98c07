"""
Access to the ``BERGMAN_NUMERICS`` settings block.

Library code calls :func:`numerics` instead of touching ``django.conf.settings``
so that the algebra stays importable without a configured Django project.
"""
from django.conf import settings

DEFAULTS = {
    "SERIES_PRECISION": "double",
    "EXTENDED_DPS": 50,
    "H_SERIES_ORDER": 64,
    "H_SERIES_TOLERANCE": 1e-12,
    "H_SERIES_METHOD": "auto",
    "CALABI_TOLERANCE": 1e-10,
    "CALABI_MIN_TRUNCATION": 30,
    "POLYNOMIAL_WINDOW": 5,
    "ORACLE_GRID_SIZE": 64,
    "ORACLE_DEGREE_CUTOFF": 48,
    "ORACLE_REFINEMENT_TOLERANCE": 1e-9,
    "ORACLE_TAIL_TOLERANCE": 1e-6,
    "REPORT_TIMESTAMPS": True,
}

PRECISION_MODES = ("double", "extended", "exact")


def numerics() -> dict:
    """Return the numerical settings with defaults filled in."""
    values = dict(DEFAULTS)
    if settings.configured:
        values.update(getattr(settings, "BERGMAN_NUMERICS", {}))
    return values
