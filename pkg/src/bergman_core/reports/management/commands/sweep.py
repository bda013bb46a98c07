"""
Rigidity sweep over a rational grid of Hartogs exponents.

Run with: python manage.py sweep --n 2 --m 1 --lambda 1 --N 3

Each grid point is dispatched as a Celery task; with CELERY_TASK_ALWAYS_EAGER
the sweep runs in-process.
"""
import logging
import time

from bergman_core.algebra.rationals import format_rational, parse_rational
from bergman_core.core.conf import numerics
from bergman_core.core.exceptions import BergmanError, ParameterOutOfRange
from bergman_core.reports.commands import BergmanCommand
from bergman_core.reports.rendering import build_report, render_json
from bergman_core.reports.runner import write_output
from bergman_core.rigidity.constraints import rational_grid
from bergman_core.rigidity.tasks import coefficient_law_task, rigidity_report_task

logger = logging.getLogger(__name__)


class Command(BergmanCommand):
    help = "Coefficient law table and rigidity conclusions over s = a/b"
    command_name = "sweep"

    def add_arguments(self, parser):
        parser.add_argument("--n", type=int, required=True, help="Dimension of the ball base")
        parser.add_argument("--m", type=int, default=1, help="Fibre dimension")
        parser.add_argument("--lambda", dest="lam", help="Metric rescaling as 'a/b'")
        parser.add_argument("--N", type=int, dest="N", help="Dimension of the target ball")
        parser.add_argument("--max-numerator", type=int, default=6)
        parser.add_argument("--max-denominator", type=int, default=6)
        parser.add_argument("--truncation", type=int, help="Calabi truncation per report")
        parser.add_argument("--output", help="Write the report to this file")
        parser.add_argument("--no-timestamp", action="store_true")

    def handle(self, *args, **options):
        start_time = time.time()
        try:
            table = self.sweep(options)
        except BergmanError as exc:
            self.fail(exc)
            return

        config = {
            key: options.get(key)
            for key in ("n", "m", "N", "max_numerator", "max_denominator", "truncation")
        }
        config["lambda"] = options.get("lam")
        spec = {"domain": "hartogs", "n": options["n"], "m": options["m"]}
        if options.get("lam") is not None:
            spec["lambda"] = options["lam"]
            spec["N"] = options["N"]
        report = build_report(
            spec=spec,
            result={"rows": table},
            checks={"law_consistent": all(row["law"]["consistent"] for row in table)},
            truncation=options.get("truncation") or numerics()["CALABI_MIN_TRUNCATION"],
            tolerances={"calabi": numerics()["CALABI_TOLERANCE"]},
            config=config,
            timestamp=not options["no_timestamp"],
        )
        content = render_json(report)
        if options.get("output"):
            try:
                write_output(options["output"], content)
            except BergmanError as exc:
                self.fail(exc)
                return
        else:
            self.stdout.write(content.decode())

        logger.info(
            "Command completed",
            extra={
                "command": "sweep",
                "grid_points": len(table),
                "duration_ms": round((time.time() - start_time) * 1000, 2),
            },
        )

    def sweep(self, options) -> list[dict]:
        n, m = options["n"], options["m"]
        if n < 1 or m < 1:
            raise ParameterOutOfRange("n and m must be at least 1.", details={"n": n, "m": m})
        with_reports = options.get("lam") is not None
        if with_reports:
            parse_rational(options["lam"])
            if options.get("N") is None:
                raise ParameterOutOfRange("A sweep with lambda needs N.", details={"N": None})

        rows = []
        for s in rational_grid(options["max_numerator"], options["max_denominator"]):
            row = {"s": format_rational(s), "law": coefficient_law_task.delay(n, str(s)).get()}
            if with_reports:
                spec = {
                    "domain": "hartogs",
                    "n": n,
                    "m": m,
                    "s": format_rational(s),
                    "lambda": options["lam"],
                    "N": options["N"],
                }
                report = rigidity_report_task.delay(spec, options.get("truncation")).get()
                row["conclusion"] = report["conclusion"]
                row["checks"] = report["checks"]
            rows.append(row)
        return rows
