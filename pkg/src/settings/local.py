"""
Local development settings.
"""
from .base import *  # noqa

DEBUG = True

# Sweeps run in-process unless a worker is started explicitly
CELERY_TASK_ALWAYS_EAGER = True

# More verbose logging
LOGGING["loggers"]["bergman_core"]["level"] = "DEBUG"
