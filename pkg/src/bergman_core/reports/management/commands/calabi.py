"""
Calabi diagnostic of the slice expansion.

Run with: python manage.py calabi --domain hartogs --n 1 --m 1 --s 1/2 --lambda 3/4 --N 3
"""
from bergman_core.reports.commands import BergmanCommand


class Command(BergmanCommand):
    help = "Expand the rescaled diastasis on a slice and test Calabi's criterion"
    command_name = "calabi"
    tolerance_key = "calabi"
