"""Exact Algebra app configuration."""
from django.apps import AppConfig


class AlgebraConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "bergman_core.algebra"
    verbose_name = "Exact Algebra"
