"""
Run with: python manage.py rigidity --domain hartogs --n 1 --m 1 --s 1/2 --lambda 3/4 --N 3

Exits with status 2 when an exact check finds an obstruction.
"""
from bergman_core.reports.commands import BergmanCommand


class Command(BergmanCommand):
    help = "Exact rigidity checks and conclusion for a Hartogs or egg domain"
    command_name = "rigidity"
    tolerance_key = "calabi"
