"""Reports app configuration."""
from django.apps import AppConfig


class ReportsConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "bergman_core.reports"
    verbose_name = "Reports"
