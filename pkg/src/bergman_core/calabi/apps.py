"""Calabi Criterion app configuration."""
from django.apps import AppConfig


class CalabiConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "bergman_core.calabi"
    verbose_name = "Calabi Criterion"
