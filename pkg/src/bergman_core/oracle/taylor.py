"""
Extended-precision Taylor oracle for the slice coefficients alpha(v).

Differentiates the closed-form slice function

    f(x) = 1 - (sum_j c'(s, j)(j+m)! (1 - C x)^(-j-m-1))^(-lambda/(N+1))

numerically with mpmath, independently of the series arithmetic.
"""
import logging
from fractions import Fraction
from numbers import Rational

import mpmath

from bergman_core.core.conf import numerics
from bergman_core.kernels.hartogs import HartogsCoefficients

logger = logging.getLogger(__name__)


def _mp(value):
    if isinstance(value, Rational):
        value = Fraction(value)
        return mpmath.mpf(value.numerator) / value.denominator
    return mpmath.mpf(value)


def taylor_slice_alpha(
    coefficients: HartogsCoefficients, lam, N: int, R: int, dps: int | None = None
) -> list[float]:
    """alpha(0..R) from mpmath.taylor at x = 0, rounded to floats."""
    dps = dps or numerics()["EXTENDED_DPS"]
    with mpmath.workdps(dps):
        n, m = coefficients.n, coefficients.m
        C = (mpmath.factorial(n) / mpmath.pi**n) ** _mp(coefficients.s)
        weights = [_mp(w) for w in coefficients.weights]
        ratio = _mp(lam) / (N + 1)

        def slice_function(x):
            total = sum(w * (1 - C * x) ** (-j - m - 1) for j, w in enumerate(weights))
            return 1 - total ** (-ratio)

        alpha = mpmath.taylor(slice_function, 0, R)
    logger.debug("Taylor oracle", extra={"n": n, "m": m, "truncation": R, "dps": dps})
    return [float(a) for a in alpha]
