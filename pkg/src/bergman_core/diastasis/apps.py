"""Diastasis app configuration."""
from django.apps import AppConfig


class DiastasisConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "bergman_core.diastasis"
    verbose_name = "Diastasis"
