"""
Test settings.
"""
from .base import *  # noqa

DEBUG = True

# Celery - run tasks synchronously in tests
CELERY_TASK_ALWAYS_EAGER = True
CELERY_TASK_EAGER_PROPAGATES = True
CELERY_BROKER_URL = "memory://"
CELERY_RESULT_BACKEND = "cache+memory://"

# Pin numerics so the suite does not depend on the caller's environment
BERGMAN_NUMERICS = {  # type: ignore
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

# Simplified logging
LOGGING = {  # type: ignore
    "version": 1,
    "disable_existing_loggers": False,
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
        },
    },
    "root": {
        "handlers": ["console"],
        "level": "WARNING",
    },
}
