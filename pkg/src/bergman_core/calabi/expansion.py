"""
Expansion of the fibre-slice diastasis of Omega_{m,s}.

On the slice z = 0 with x = ||xi||^2, a Kaehler immersion of
(Omega_{m,s}, lambda g) into B^N requires

    1 - exp(-lambda D / (N+1)) = 1 - (1 - Y)^mu P(Y)^(-lambda/(N+1)) = sum_v alpha(v) x^v

with Y = C x, C = K_{B^n}(0)^s, mu = lambda(n+m+1)/(N+1) and
P(Y) = sum_j c'(s, j) (j+m)! (1 - Y)^(n-j). All computations run in Y so that
the coefficients stay rational whenever lambda is; alpha(v) is the Y-coefficient
times C^v.
"""
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational

import mpmath
from scipy.special import binom

from bergman_core.algebra.multiindex import MultiIndex, compositions
from bergman_core.algebra.polynomials import RationalPolynomial
from bergman_core.algebra.rationals import generalized_binomial, pochhammer
from bergman_core.core.conf import PRECISION_MODES, numerics
from bergman_core.core.exceptions import (
    IrrationalParameter,
    ParameterOutOfRange,
    PrecisionBudgetExceeded,
)
from bergman_core.kernels.ball import ball_origin_value
from bergman_core.kernels.hartogs import HartogsCoefficients
from bergman_core.series.truncated import TruncatedSeries

logger = logging.getLogger(__name__)

MAX_TRUNCATION = {"double": 400, "extended": 400, "exact": 160}


@dataclass(frozen=True)
class SliceExpansion:
    """
    alpha(0..R) of the slice function, with the data it was computed from.

    ``exact_alpha`` holds alpha(v) / C^v as Fractions when computed exactly.
    """

    n: int
    m: int
    s: Fraction
    lam: Fraction | float
    N: int
    C: float
    mu: Fraction | float
    exponent_ratio: Fraction | float
    alpha: tuple
    precision: str
    exact_alpha: tuple[Fraction, ...] | None = field(default=None)

    @property
    def truncation(self) -> int:
        return len(self.alpha) - 1

    def beta(self, max_degree: int | None = None) -> dict[MultiIndex, float]:
        from .criterion import beta_from_alpha

        return beta_from_alpha(self.alpha, self.m, max_degree)


def slice_constant(n: int, s, precision: str = "double"):
    """C = K_{B^n}(0, 0)^s = (n!/pi^n)^s."""
    if precision == "extended":
        return (mpmath.factorial(n) / mpmath.pi**n) ** _to_mpf(s)
    return ball_origin_value(n) ** float(s)


def slice_polynomial(coefficients: HartogsCoefficients) -> RationalPolynomial:
    """P(Y) = sum_j c'(s, j) (j+m)! (1 - Y)^(d-j); P(0) = 1."""
    one_minus = RationalPolynomial((1, -1))
    d = coefficients.degree
    return sum(
        (w * one_minus ** (d - j) for j, w in enumerate(coefficients.weights)),
        RationalPolynomial(),
    )


def slice_exponents(coefficients: HartogsCoefficients, lam, N: int):
    """(mu, lambda/(N+1)); both exact when lambda is rational."""
    if isinstance(lam, Rational):
        ratio = Fraction(lam) / (N + 1)
    else:
        ratio = float(lam) / (N + 1)
    return ratio * (coefficients.degree + coefficients.m + 1), ratio


def _to_mpf(value):
    if isinstance(value, Rational):
        value = Fraction(value)
        return mpmath.mpf(value.numerator) / value.denominator
    return mpmath.mpf(value)


def _convert(value, precision: str):
    if precision == "exact":
        return Fraction(value)
    if precision == "extended":
        return _to_mpf(value)
    return float(value)


def _slice_series(coefficients, lam, N: int, R: int, precision: str) -> TruncatedSeries:
    """1 - (1-Y)^mu P(Y)^(-lambda/(N+1)) through order R in the given arithmetic."""
    mu, ratio = slice_exponents(coefficients, lam, N)
    if precision == "exact" and not isinstance(ratio, Fraction):
        raise IrrationalParameter(
            "Exact slice expansion needs a rational lambda.", details={"lambda": repr(lam)}
        )
    one = _convert(1, precision)
    polynomial = slice_polynomial(coefficients)
    P = TruncatedSeries([_convert(c, precision) for c in polynomial.coefficients], R)
    one_minus = TruncatedSeries.linear(one, -one, R)
    G = one_minus.real_pow(_convert(mu, precision)) * P.real_pow(-_convert(ratio, precision))
    return one - G


def _check_request(lam, R: int, precision: str) -> None:
    if precision not in PRECISION_MODES:
        raise ParameterOutOfRange(
            f"Unknown precision mode '{precision}'.", details={"precision": precision}
        )
    if not lam > 0:
        raise ParameterOutOfRange("lambda must be positive.", details={"lambda": str(lam)})
    if R < 1:
        raise ParameterOutOfRange("Truncation must be at least 1.", details={"truncation": R})
    if R > MAX_TRUNCATION[precision]:
        raise PrecisionBudgetExceeded(
            details={"truncation": R, "precision": precision, "limit": MAX_TRUNCATION[precision]}
        )


def exact_slice_alpha(coefficients: HartogsCoefficients, lam, N: int, R: int):
    """alpha(v) / C^v for v = 0..R as Fractions."""
    _check_request(lam, R, "exact")
    return tuple(_slice_series(coefficients, lam, N, R, "exact"))


def slice_expansion(
    coefficients: HartogsCoefficients, lam, N: int, R: int, precision: str | None = None
) -> SliceExpansion:
    config = numerics()
    precision = precision or config["SERIES_PRECISION"]
    _check_request(lam, R, precision)
    mu, ratio = slice_exponents(coefficients, lam, N)

    exact = None
    if precision == "extended":
        with mpmath.workdps(config["EXTENDED_DPS"]):
            C = slice_constant(coefficients.n, coefficients.s, "extended")
            series = _slice_series(coefficients, lam, N, R, "extended")
            alpha = tuple(a * C**v for v, a in enumerate(series))
    elif precision == "exact":
        exact = exact_slice_alpha(coefficients, lam, N, R)
        C = slice_constant(coefficients.n, coefficients.s)
        alpha = tuple(float(a) * C**v for v, a in enumerate(exact))
    else:
        C = slice_constant(coefficients.n, coefficients.s)
        series = _slice_series(coefficients, lam, N, R, "double")
        alpha = tuple(a * C**v for v, a in enumerate(series))

    logger.debug(
        "Computed slice expansion",
        extra={
            "n": coefficients.n,
            "m": coefficients.m,
            "s": str(coefficients.s),
            "lambda": str(lam),
            "N": N,
            "truncation": R,
            "precision": precision,
        },
    )
    return SliceExpansion(
        n=coefficients.n,
        m=coefficients.m,
        s=coefficients.s,
        lam=lam,
        N=N,
        C=float(C),
        mu=mu,
        exponent_ratio=ratio,
        alpha=alpha,
        precision=precision,
        exact_alpha=exact,
    )


def hartogs_slice_alpha(
    coefficients: HartogsCoefficients,
    n: int,
    m: int,
    lam,
    N: int,
    R: int,
    precision: str | None = None,
) -> list:
    """alpha(0..R) of the slice function by series arithmetic."""
    if (n, m) != (coefficients.n, coefficients.m):
        raise ParameterOutOfRange(
            "Coefficients were computed for different dimensions.",
            details={"n": n, "m": m, "coefficients": [coefficients.n, coefficients.m]},
        )
    return list(slice_expansion(coefficients, lam, N, R, precision).alpha)


def slice_alpha_resummed(
    coefficients: HartogsCoefficients, lam, N: int, R: int, window: int | None = None
) -> tuple[Fraction, ...]:
    """
    alpha(v) / C^v from the double sum over l and multi-indices a:

        1 - sum_l binom(r + l - 1, l) sum_{|a| = l} l!/a! (-1)^(l - a_last)
              prod_i w_{i-1}^(a_i) (1 - Y)^(mu + E(a)),   r = lambda/(N+1)

    with w_j = c'(s, j)(j+m)! and E(a) = sum_i (d - i + 1) a_i. The l = 0 term
    is the plain (1 - Y)^mu. Summation in l stops once every requested
    coefficient has been unchanged for ``window`` consecutive l.
    """
    window = window or numerics()["POLYNOMIAL_WINDOW"]
    _check_request(lam, R, "exact")
    mu, ratio = slice_exponents(coefficients, lam, N)
    if not isinstance(ratio, Fraction):
        raise IrrationalParameter(
            "Resummation needs a rational lambda.", details={"lambda": repr(lam)}
        )
    weights = coefficients.weights
    d = coefficients.degree
    parts = d + 2

    totals = [Fraction(int(v == 0)) for v in range(R + 1)]
    stable = [0] * (R + 1)
    l = 0
    while min(stable) < window:
        by_exponent: dict[int, Fraction] = {}
        for a in compositions(l, parts):
            term = Fraction(a.multinomial * (-1) ** (l - a[-1]))
            for i, ai in enumerate(a[:-1], start=1):
                term *= weights[i - 1] ** ai
            exponent = sum((d - i + 1) * ai for i, ai in enumerate(a[:-1], start=1))
            by_exponent[exponent] = by_exponent.get(exponent, Fraction(0)) + term
        outer = pochhammer(ratio, l) / math.factorial(l)
        for v in range(R + 1):
            contribution = sum(
                c * generalized_binomial(mu + e, v) * (-1) ** v for e, c in by_exponent.items()
            )
            contribution *= outer
            totals[v] -= contribution
            stable[v] = stable[v] + 1 if contribution == 0 else 0
        l += 1
    logger.debug("Resummed slice expansion", extra={"truncation": R, "terms": l})
    return tuple(totals)


def ball_slice_alpha(mu, R: int) -> list:
    """Coefficients of 1 - (1 - x)^mu, i.e. binom(mu, v)(-1)^(v+1) for v >= 1."""
    alpha = [0 * mu]
    for v in range(1, R + 1):
        if isinstance(mu, Rational):
            alpha.append(generalized_binomial(Fraction(mu), v) * (-1) ** (v + 1))
        else:
            alpha.append(float(binom(mu, v)) * (-1) ** (v + 1))
    return alpha
