"""
Independent quadrature check of the closed-form kernels.

Run with: python manage.py oracle_compare --domain egg --n 1 --p 1 --q 1 --k 1/2
"""
from bergman_core.reports.commands import BergmanCommand


class Command(BergmanCommand):
    help = "Compare closed-form kernels against the monomial-basis oracle"
    command_name = "oracle-compare"
    tolerance_key = "refinement"

    def add_command_arguments(self, parser):
        parser.add_argument("--samples", type=int, help="Number of random point pairs")

    def command_data(self, options):
        if options.get("samples") is None:
            return {}
        return {"samples": options["samples"]}
