"""Kernels app configuration."""
from django.apps import AppConfig


class KernelsConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "bergman_core.kernels"
    verbose_name = "Kernels"
