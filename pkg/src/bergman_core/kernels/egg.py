"""
Egg domains E(p, q, B^n, k) = {||xi1||^2 + ||xi2||^(2k) < 1 - ||z||^2}.

The kernel is the mixed partial Lambda^{(p-1),(q-1)} of an explicit function
built from the series H_{jm}. Values follow the unit-volume normalization of
the closed form, so they differ from the Lebesgue kernel by a constant factor;
diastasis and ratios K(z)/K(0) are unaffected.
"""
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction

import numpy as np
from scipy.special import binom

from bergman_core.algebra.homogeneous import SymmetricBaseData, chi_polynomial, egg_bj
from bergman_core.algebra.polynomials import (
    LinearFactor,
    RationalPolynomial,
    to_rising_factorial_basis,
)
from bergman_core.algebra.rationals import as_rational, pochhammer
from bergman_core.core.conf import numerics
from bergman_core.core.exceptions import OutsideDomain, ParameterOutOfRange, SeriesDivergence
from bergman_core.series.jets import Jet2

from .ball import check_in_ball
from .specs import DomainSpec, hermitian_inner, squared_norm

logger = logging.getLogger(__name__)

SERIES = "series"
CLOSED_FORM = "closed_form"
AUTO = "auto"
H_SERIES_METHODS = (SERIES, CLOSED_FORM, AUTO)


@dataclass(frozen=True)
class EggCoefficients:
    n: int
    chi: RationalPolynomial
    chi0: Fraction
    bj: tuple[Fraction, ...]
    genus: int


def egg_coefficients(n: int, base: SymmetricBaseData | None = None) -> EggCoefficients:
    """chi, chi(0), b_1..b_{n+2} and the genus for the ball base B^n."""
    base = base or SymmetricBaseData.ball(n)
    chi = chi_polynomial(base.rank, base.a, base.b)
    chi0 = chi(Fraction(0))
    if chi0 == 0:
        raise ParameterOutOfRange("chi(0) vanishes.", details={"n": n})
    return EggCoefficients(n=n, chi=chi, chi0=chi0, bj=egg_bj(chi, n), genus=base.genus)


@dataclass(frozen=True)
class LambdaEvaluation:
    """A mixed partial of Lambda with the worst relative tail of the H_{jm} series."""

    value: complex
    tail_estimate: float
    order: int


def h_jm_coefficients(j: int, m: int, k, order: int) -> np.ndarray:
    """((l+1)/k + 2 + m)_{j-m} for l = 0..order."""
    l = np.arange(order + 1, dtype=float)
    start = (l + 1) / float(k) + 2 + m
    return pochhammer(start, j - m)


def h_jm_taylor(j: int, m: int, k, u0: complex, derivatives: int, order: int):
    """
    Taylor coefficients of the truncated H_{jm} at u0, for 0..derivatives, and
    the largest relative tail estimate among them.

    The tail is the last retained term times rho / (1 - rho), with rho the
    ratio of the last two terms.
    """
    a = h_jm_coefficients(j, m, k, order)
    l = np.arange(order + 1)
    taylor = []
    worst_tail = 0.0
    for r in range(derivatives + 1):
        mask = l >= r
        terms = np.zeros(order + 1, dtype=complex)
        terms[mask] = a[mask] * binom(l[mask], r) * np.power(complex(u0), l[mask] - r)
        value = terms.sum()
        taylor.append(value)
        if u0 == 0 or order - 1 < r:
            continue
        last, previous = abs(terms[-1]), abs(terms[-2])
        rho = last / previous if previous else 0.0
        if rho >= 1:
            return taylor, math.inf
        tail = last * rho / (1 - rho)
        worst_tail = max(worst_tail, tail / abs(value) if value else tail)
    return taylor, worst_tail


@lru_cache(maxsize=256)
def h_jm_resummed(j: int, m: int, k) -> tuple[Fraction, ...]:
    """
    Weights W_e with H_{jm}(u) = sum_e W_e / (1-u)^(e+1), exactly.

    The coefficient ((l+1)/k + 2 + m)_{j-m} is a polynomial in l; written in
    the basis (l+1)_e it resums termwise since sum_l (l+1)_e u^l = e!/(1-u)^(e+1).
    """
    k = as_rational(k, "k")
    polynomial = RationalPolynomial.from_factors(
        LinearFactor(1 / k + 2 + m + t, 1 / k) for t in range(j - m)
    )
    return tuple(w * math.factorial(e) for e, w in enumerate(to_rising_factorial_basis(polynomial)))


def h_jm_closed_form_taylor(j: int, m: int, k, u0: complex, derivatives: int):
    weights = h_jm_resummed(j, m, k)
    base = 1 - complex(u0)
    return [
        sum(float(W) * math.comb(e + r, r) * base ** (-(e + r + 1)) for e, W in enumerate(weights))
        for r in range(derivatives + 1)
    ]


def _assemble_h(coefficients, k, x, u, one_minus, derivatives: int, order: int, closed_form: bool):
    """H(t1, u) as a jet and the worst H_{jm} tail; the closed form has no tail."""
    u0 = complex(u.value)
    worst_tail = 0.0
    H = Jet2.constant(0, *x.shape, base=x.base)
    for j, bj in enumerate(coefficients.bj, start=1):
        inner = Jet2.constant(0, *x.shape, base=x.base)
        for m in range(j + 1):
            weight = float(pochhammer(Fraction(-j), m) * pochhammer(2, m) / math.factorial(m))
            if closed_form:
                taylor = h_jm_closed_form_taylor(j, m, k, u0, derivatives)
            else:
                taylor, tail = h_jm_taylor(j, m, float(k), u0, derivatives, order)
                worst_tail = max(worst_tail, tail)
            inner = inner + weight * x**m * u.compose_taylor(taylor)
        H = H + float(bj) * one_minus ** (-j) * inner
    return H, worst_tail


def egg_lambda_jet(
    coefficients: EggCoefficients,
    k,
    P: int,
    Q: int,
    t1,
    t2,
    order: int | None = None,
    tolerance: float | None = None,
    method: str | None = None,
):
    """
    Jet of Lambda(t1, t2) = (k/chi(0)) (1-t1)^(-1/k) H(t1, t2 (1-t1)^(-1/k)) through
    order (P, Q) at the given base point, and the worst H_{jm} tail estimate.

    ``method`` is "series", "closed_form" or "auto" (default from
    ``H_SERIES_METHOD``). "auto" sums the truncated series and switches to the
    exact resummation when its tail exceeds the tolerance.
    """
    config = numerics()
    order = order or config["H_SERIES_ORDER"]
    tolerance = tolerance if tolerance is not None else config["H_SERIES_TOLERANCE"]
    method = method or config["H_SERIES_METHOD"]
    if method not in H_SERIES_METHODS:
        raise ParameterOutOfRange(
            f"Unknown H series method '{method}'.", details={"method": method}
        )
    k_value = float(k)
    if not abs(t1) < 1:
        raise OutsideDomain("Lambda needs |t1| < 1.", details={"t1": str(t1)})

    base = (complex(t1), complex(t2))
    x = Jet2.variable(0, P, Q, base)
    y = Jet2.variable(1, P, Q, base)
    one_minus = 1 - x
    scale = one_minus ** (-1 / k_value)
    u = y * scale
    if not abs(complex(u.value)) < 1:
        raise SeriesDivergence(
            "H series argument is outside its disc of convergence.",
            details={"abs_u": abs(complex(u.value))},
        )

    derivatives = P + Q
    H, worst_tail = _assemble_h(
        coefficients, k, x, u, one_minus, derivatives, order, closed_form=method == CLOSED_FORM
    )
    if method == AUTO and worst_tail > tolerance:
        logger.info(
            "H series tail above tolerance, using the resummed closed form",
            extra={"tail_estimate": worst_tail, "tolerance": tolerance, "order": order},
        )
        H, worst_tail = _assemble_h(
            coefficients, k, x, u, one_minus, derivatives, order, closed_form=True
        )
    elif worst_tail > tolerance:
        raise SeriesDivergence(
            "Truncated H series tail exceeds the tolerance.",
            details={"tail_estimate": worst_tail, "tolerance": tolerance, "order": order},
        )
    if worst_tail > tolerance / 10:
        logger.warning(
            "H series tail close to tolerance",
            extra={"tail_estimate": worst_tail, "tolerance": tolerance, "order": order},
        )
    return (k_value / float(coefficients.chi0)) * scale * H, worst_tail


def egg_lambda_evaluation(coefficients, k, p: int, q: int, t1, t2, **options) -> LambdaEvaluation:
    jet, tail = egg_lambda_jet(coefficients, k, p - 1, q - 1, t1, t2, **options)
    return LambdaEvaluation(
        value=jet.mixed_partial(p - 1, q - 1),
        tail_estimate=tail,
        order=options.get("order") or numerics()["H_SERIES_ORDER"],
    )


def egg_lambda_derivative(coefficients, k, p: int, q: int, t1, t2, **options):
    """
    Lambda^{(p-1),(q-1)}(t1, t2). Real arguments give a float, complex
    arguments (off-diagonal kernels) a complex number.
    """
    value = egg_lambda_evaluation(coefficients, k, p, q, t1, t2, **options).value
    if isinstance(t1, complex) or isinstance(t2, complex):
        return complex(value)
    return float(np.real(value))


def check_in_egg(spec: DomainSpec, point, name: str = "point") -> None:
    z, xi1, xi2 = spec.split(point)
    check_in_ball(z, f"{name} base")
    level = squared_norm(xi1) + squared_norm(xi2) ** float(spec.k)
    room = 1 - squared_norm(z)
    if not level < room:
        raise OutsideDomain(
            f"{name} is not inside the egg domain.",
            details={"point": name, "level": level, "generic_norm": room},
        )


def egg_kernel(spec: DomainSpec, point1, point2, coefficients=None, **options) -> complex:
    """
    K_E = Lambda^{(p-1),(q-1)}(<xi1,eta1>/N, <xi2,eta2>/N^(1/k)) / (p! q!) * N^(-p-q/k-g)
    with N = 1 - <z, w> on principal branches.
    """
    check_in_egg(spec, point1, "point1")
    check_in_egg(spec, point2, "point2")
    if coefficients is None:
        coefficients = egg_coefficients(spec.n)
    z, xi1, xi2 = spec.split(point1)
    w, eta1, eta2 = spec.split(point2)
    p, q, k = spec.p, spec.q, float(spec.k)

    generic = 1 - hermitian_inner(z, w)
    t1 = hermitian_inner(xi1, eta1) / generic
    t2 = hermitian_inner(xi2, eta2) / generic ** (1 / k)
    derivative = egg_lambda_evaluation(coefficients, spec.k, p, q, t1, t2, **options).value
    exponent = -p - q / k - coefficients.genus
    return complex(derivative) / (math.factorial(p) * math.factorial(q)) * generic**exponent
