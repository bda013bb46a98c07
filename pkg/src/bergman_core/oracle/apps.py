"""Quadrature Oracle app configuration."""
from django.apps import AppConfig


class OracleConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "bergman_core.oracle"
    verbose_name = "Quadrature Oracle"
