"""Rigidity app configuration."""
from django.apps import AppConfig


class RigidityConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "bergman_core.rigidity"
    verbose_name = "Rigidity"

    def ready(self):
        # Binds the shared tasks to the configured Celery app
        import celery_app  # noqa: F401
