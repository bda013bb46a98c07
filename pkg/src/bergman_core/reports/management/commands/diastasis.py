"""
Run with: python manage.py diastasis --domain hartogs --n 1 --m 1 --s 1/2 --at 0.1,0 --to 0,0.2
"""
from bergman_core.reports.commands import BergmanCommand


class Command(BergmanCommand):
    help = "Bergman diastasis D(z, w), scaled by lambda when one is given"
    command_name = "diastasis"
    tolerance_key = "series"

    def add_command_arguments(self, parser):
        parser.add_argument("--at", help="Point z as 'z1,z2,...'")
        parser.add_argument("--to", help="Point w as 'w1,w2,...'")

    def command_data(self, options):
        return {"points": [options[name] for name in ("at", "to") if options.get(name)]}
