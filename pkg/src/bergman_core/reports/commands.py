"""
Shared plumbing for the toolkit's management commands.
"""
import json
import logging
import sys
import time
from pathlib import Path

from django.core.management.base import BaseCommand

from bergman_core.core.conf import PRECISION_MODES
from bergman_core.core.domains import AVAILABLE_DOMAINS
from bergman_core.core.exceptions import (
    EXIT_ERROR,
    EXIT_SUCCESS,
    BergmanError,
    SchemaViolation,
    error_payload,
)

from .config import RunConfig
from .rendering import render_json
from .runner import run
from .serializers import FORMATS

logger = logging.getLogger(__name__)

DOMAIN_OPTIONS = ("n", "m", "s", "p", "q", "k", "N")


class BergmanCommand(BaseCommand):
    """
    A command that builds a RunConfig from its options, runs it and writes
    the report to stdout (or ``--output``) and errors to stderr.
    """

    requires_system_checks = []
    command_name: str = ""
    tolerance_key: str | None = None

    def add_arguments(self, parser):
        parser.add_argument(
            "--domain", choices=sorted(AVAILABLE_DOMAINS), help="Model domain"
        )
        parser.add_argument("--n", type=int, help="Dimension of the ball base")
        parser.add_argument("--m", type=int, help="Fibre dimension of a Hartogs domain")
        parser.add_argument("--s", help="Hartogs exponent as 'a/b'")
        parser.add_argument("--p", type=int, help="First fibre dimension of an egg")
        parser.add_argument("--q", type=int, help="Second fibre dimension of an egg")
        parser.add_argument("--k", help="Egg exponent as 'a/b'")
        parser.add_argument("--lambda", dest="lam", help="Metric rescaling as 'a/b'")
        parser.add_argument("--N", type=int, dest="N", help="Dimension of the target ball")
        parser.add_argument("--truncation", type=int, help="Expansion or degree truncation")
        parser.add_argument("--tol", type=float, help="Tolerance of the main check")
        parser.add_argument("--precision", choices=PRECISION_MODES, help="Series arithmetic")
        parser.add_argument("--format", choices=FORMATS, default="json", help="Output format")
        parser.add_argument("--output", help="Write the report to this file")
        parser.add_argument(
            "--no-timestamp",
            action="store_true",
            help="Leave the timestamp out of the report",
        )
        parser.add_argument("--config", help="Read the whole run configuration from a JSON file")
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        """Hook for command-specific options."""

    def command_data(self, options) -> dict:
        """Command-specific configuration entries."""
        return {}

    def build_data(self, options) -> dict:
        if options.get("config"):
            path = Path(options["config"])
            try:
                data = json.loads(path.read_text())
            except (OSError, ValueError) as exc:
                raise SchemaViolation(
                    "Cannot read the configuration file.",
                    details={"path": str(path), "reason": str(exc)},
                ) from exc
            if not isinstance(data, dict):
                raise SchemaViolation(
                    "The configuration file must hold a JSON object.", details={"path": str(path)}
                )
            data.setdefault("command", self.command_name)
            return data

        spec = {"domain": options.get("domain")}
        for name in DOMAIN_OPTIONS:
            if options.get(name) is not None:
                spec[name] = options[name]
        if options.get("lam") is not None:
            spec["lambda"] = options["lam"]

        data = {
            "command": self.command_name,
            "spec": spec,
            "format": options.get("format") or "json",
            "timestamp": not options.get("no_timestamp", False),
        }
        for name in ("truncation", "precision", "output"):
            if options.get(name) is not None:
                data[name] = options[name]
        if options.get("tol") is not None and self.tolerance_key:
            data["tolerances"] = {self.tolerance_key: options["tol"]}
        data.update(self.command_data(options))
        return data

    def handle(self, *args, **options):
        start_time = time.time()
        try:
            config = RunConfig.from_dict(self.build_data(options))
        except BergmanError as exc:
            self.fail(exc)
            return

        result = run(config)
        if result.error:
            self.stderr.write(result.content.decode())
        elif not config.output:
            self.stdout.write(result.content.decode())

        logger.info(
            "Command completed",
            extra={
                "command": config.command,
                "domain": config.spec.kind,
                "exit_status": result.exit_status,
                "conclusion": result.report.get("result", {}).get("conclusion"),
                "duration_ms": round((time.time() - start_time) * 1000, 2),
            },
        )
        if result.exit_status != EXIT_SUCCESS:
            sys.exit(result.exit_status)

    def fail(self, exc: Exception):
        payload = error_payload(exc)
        self.stderr.write(render_json(payload).decode())
        sys.exit(getattr(exc, "exit_status", EXIT_ERROR))
