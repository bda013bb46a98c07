"""
Bergman kernel of a model domain.

Run with: python manage.py kernel --domain ball --n 2 --at 0,0
"""
from bergman_core.reports.commands import BergmanCommand


class Command(BergmanCommand):
    help = "Evaluate K(z, w) for a ball, Hartogs or egg domain"
    command_name = "kernel"
    tolerance_key = "series"

    def add_command_arguments(self, parser):
        parser.add_argument("--at", help="Point z as 'z1,z2,...'")
        parser.add_argument("--to", help="Second point w; defaults to z")

    def command_data(self, options):
        points = [options[name] for name in ("at", "to") if options.get(name)]
        return {"points": points}
