"""
Django settings for the Bergman rigidity toolkit.
"""
from pathlib import Path

import environ

# Build paths
# __file__ is at: src/settings/base.py
# parent = src/settings
# parent.parent = src
BASE_DIR = Path(__file__).resolve().parent.parent
# ROOT_DIR is the project root (contains .env, src/, docs/, etc.)
ROOT_DIR = BASE_DIR.parent

# Environment variables
env = environ.Env(
    DEBUG=(bool, False),
    SECRET_KEY=(str, "change-me-in-production"),
    REDIS_URL=(str, "redis://localhost:6379/0"),
    SERIES_PRECISION=(str, "double"),
    EXTENDED_DPS=(int, 50),
    H_SERIES_ORDER=(int, 64),
    H_SERIES_TOLERANCE=(float, 1e-12),
    H_SERIES_METHOD=(str, "auto"),
    CALABI_TOLERANCE=(float, 1e-10),
    CALABI_MIN_TRUNCATION=(int, 30),
    POLYNOMIAL_WINDOW=(int, 5),
    ORACLE_GRID_SIZE=(int, 64),
    ORACLE_DEGREE_CUTOFF=(int, 48),
    ORACLE_REFINEMENT_TOLERANCE=(float, 1e-9),
    ORACLE_TAIL_TOLERANCE=(float, 1e-6),
    REPORT_TIMESTAMPS=(bool, True),
)

# Read .env file if exists
env_file = ROOT_DIR / ".env"
if env_file.exists():
    environ.Env.read_env(str(env_file))

SECRET_KEY = env("SECRET_KEY")

DEBUG = env("DEBUG")

ALLOWED_HOSTS: list[str] = []

# Application definition
INSTALLED_APPS = [
    # Third party
    "rest_framework",
    # Toolkit apps
    "bergman_core.core",
    "bergman_core.algebra",
    "bergman_core.series",
    "bergman_core.kernels",
    "bergman_core.diastasis",
    "bergman_core.calabi",
    "bergman_core.rigidity",
    "bergman_core.oracle",
    "bergman_core.reports",
]

# No database; reports go to files or stdout.
DATABASES: dict = {}

LANGUAGE_CODE = "en-us"
TIME_ZONE = "UTC"
USE_I18N = False
USE_TZ = True

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

# REST Framework (serializers validate run configurations, renderer writes reports)
REST_FRAMEWORK = {
    "DEFAULT_RENDERER_CLASSES": [
        "rest_framework.renderers.JSONRenderer",
    ],
    "UNAUTHENTICATED_USER": None,
    "COERCE_DECIMAL_TO_STRING": True,
}

# Numerical configuration
BERGMAN_NUMERICS = {
    "SERIES_PRECISION": env("SERIES_PRECISION"),
    "EXTENDED_DPS": env("EXTENDED_DPS"),
    "H_SERIES_ORDER": env("H_SERIES_ORDER"),
    "H_SERIES_TOLERANCE": env("H_SERIES_TOLERANCE"),
    "H_SERIES_METHOD": env("H_SERIES_METHOD"),
    "CALABI_TOLERANCE": env("CALABI_TOLERANCE"),
    "CALABI_MIN_TRUNCATION": env("CALABI_MIN_TRUNCATION"),
    "POLYNOMIAL_WINDOW": env("POLYNOMIAL_WINDOW"),
    "ORACLE_GRID_SIZE": env("ORACLE_GRID_SIZE"),
    "ORACLE_DEGREE_CUTOFF": env("ORACLE_DEGREE_CUTOFF"),
    "ORACLE_REFINEMENT_TOLERANCE": env("ORACLE_REFINEMENT_TOLERANCE"),
    "ORACLE_TAIL_TOLERANCE": env("ORACLE_TAIL_TOLERANCE"),
    "REPORT_TIMESTAMPS": env("REPORT_TIMESTAMPS"),
}

# Celery Configuration (parameter sweeps)
CELERY_BROKER_URL = env("CELERY_BROKER_URL", default=env("REDIS_URL"))
CELERY_RESULT_BACKEND = env("REDIS_URL")
CELERY_ACCEPT_CONTENT = ["json"]
CELERY_TASK_SERIALIZER = "json"
CELERY_RESULT_SERIALIZER = "json"
CELERY_TIMEZONE = TIME_ZONE
CELERY_TASK_TRACK_STARTED = True
CELERY_TASK_TIME_LIMIT = 30 * 60  # 30 minutes
CELERY_WORKER_PREFETCH_MULTIPLIER = 1
CELERY_TASK_ALWAYS_EAGER = env.bool("CELERY_TASK_ALWAYS_EAGER", default=True)
CELERY_TASK_EAGER_PROPAGATES = True

# Logging
LOG_DIR = ROOT_DIR / "logs"
LOG_DIR.mkdir(exist_ok=True)

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{levelname} {asctime} {module} {process:d} {thread:d} {message}",
            "style": "{",
        },
        "json": {
            "()": "pythonjsonlogger.jsonlogger.JsonFormatter",
            "format": "%(asctime)s %(name)s %(levelname)s %(message)s",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
        "file": {
            "class": "logging.handlers.RotatingFileHandler",
            "filename": LOG_DIR / "bergman.log",
            "maxBytes": 10485760,  # 10MB
            "backupCount": 5,
            "formatter": "json",
        },
    },
    "root": {
        "handlers": ["console"],
        "level": env("LOG_LEVEL", default="WARNING"),
    },
    "loggers": {
        "django": {
            "handlers": ["console", "file"],
            "level": env("LOG_LEVEL", default="WARNING"),
            "propagate": False,
        },
        "bergman_core": {
            "handlers": ["console", "file"],
            "level": "DEBUG" if DEBUG else "INFO",
            "propagate": False,
        },
    },
}
