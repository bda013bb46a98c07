"""Series app configuration."""
from django.apps import AppConfig


class SeriesConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "bergman_core.series"
    verbose_name = "Series"
