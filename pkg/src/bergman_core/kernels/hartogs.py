"""
Hartogs-type domains over the ball: coefficients c(s, j) and the kernel.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from bergman_core.algebra.homogeneous import (
    HomogeneousBaseData,
    first_nonpositive_term,
    hartogs_base_polynomial,
    hartogs_normalization,
)
from bergman_core.algebra.polynomials import RationalPolynomial, to_rising_factorial_basis
from bergman_core.algebra.rationals import as_rational
from bergman_core.core.exceptions import OutsideDomain, ParameterOutOfRange

from .ball import ball_kernel_power, ball_origin_value, check_in_ball
from .specs import DomainSpec, hermitian_inner, squared_norm

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HartogsCoefficients:
    """
    Kernel coefficients of Omega_{m,s} over B^n.

    Attributes:
        c: c(s, 0)..c(s, d) with b(k) = sum c(s, j) (k+1)_j
        S: sum c(s, j) (j+m)!
        c_normalized: c'(s, j) = c(s, j) / S
        base_polynomial: b(k) in factored form
    """

    n: int
    m: int
    s: Fraction
    c: tuple[Fraction, ...]
    S: Fraction
    c_normalized: tuple[Fraction, ...]
    base_polynomial: RationalPolynomial

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def weight(self, j: int) -> Fraction:
        """c'(s, j) (j+m)!; the weights sum to 1."""
        return self.c_normalized[j] * math.factorial(j + self.m)

    @property
    def weights(self) -> tuple[Fraction, ...]:
        return tuple(self.weight(j) for j in range(self.degree + 1))

    @property
    def positive_expansion(self) -> bool:
        """True when every coefficient (k+1)_m b(k+m) of the kernel sum in t is positive."""
        return first_nonpositive_term(self.base_polynomial, self.m) is None


def hartogs_coefficients(n: int, m: int, s, base: HomogeneousBaseData | None = None):
    """
    c(s, j), S and c'(s, j) for Omega_{m,s}, exactly.

    s = 0 is refused: the base polynomial drops to degree 0 and that domain
    admits no immersion into a finite ball.
    """
    s = as_rational(s, "s")
    if m < 1:
        raise ParameterOutOfRange("Fibre dimension m must be at least 1.", details={"m": m})
    if s == 0:
        raise ParameterOutOfRange(
            "s = 0 makes the base polynomial degenerate.", details={"s": "0"}
        )
    polynomial = hartogs_base_polynomial(base if base is not None else n, s)
    c = to_rising_factorial_basis(polynomial)
    S = hartogs_normalization(polynomial, m)
    coefficients = HartogsCoefficients(
        n=n,
        m=m,
        s=s,
        c=c,
        S=S,
        c_normalized=tuple(cj / S for cj in c),
        base_polynomial=polynomial,
    )
    logger.debug(
        "Computed Hartogs coefficients",
        extra={"n": n, "m": m, "s": str(s), "c": [str(x) for x in c], "S": str(S)},
    )
    return coefficients


def hartogs_boundary_parameter(spec: DomainSpec, z, xi) -> float:
    """t = K_B(z, z)^s ||xi||^2 on the diagonal; the point is inside iff t < 1."""
    return float(ball_kernel_power(spec.n, z, z, spec.s).real) * squared_norm(xi)


def check_in_hartogs(spec: DomainSpec, point, name: str = "point") -> None:
    z, xi = spec.split(point)
    check_in_ball(z, f"{name} base")
    t = hartogs_boundary_parameter(spec, z, xi)
    if not t < 1:
        raise OutsideDomain(
            f"{name} is not inside the Hartogs domain.", details={"point": name, "t": t}
        )


def hartogs_kernel(spec: DomainSpec, point1, point2, coefficients=None) -> complex:
    """
    K = K_B(z, w)^(ms+1) / pi^m * sum_j c(s, j) (j+m)! / (1 - t)^(j+m+1)
    with t = K_B(z, w)^s <xi, eta>.
    """
    check_in_hartogs(spec, point1, "point1")
    check_in_hartogs(spec, point2, "point2")
    if coefficients is None:
        coefficients = hartogs_coefficients(spec.n, spec.m, spec.s)
    if not coefficients.positive_expansion:
        raise ParameterOutOfRange(
            "The kernel sum has a non-positive coefficient for these parameters.",
            details={
                "s": str(spec.s),
                "m": spec.m,
                "k": first_nonpositive_term(coefficients.base_polynomial, spec.m),
            },
        )
    z, xi = spec.split(point1)
    w, eta = spec.split(point2)
    n, m, s = spec.n, spec.m, spec.s

    t = ball_kernel_power(n, z, w, s) * hermitian_inner(xi, eta)
    if not abs(t) < 1:
        raise OutsideDomain("Fibre parameter |t| must be below 1.", details={"abs_t": abs(t)})

    total = sum(
        float(cj) * math.factorial(j + m) * (1 - t) ** (-(j + m + 1))
        for j, cj in enumerate(coefficients.c)
    )
    return ball_kernel_power(n, z, w, m * s + 1) / math.pi**m * total


def hartogs_fibre_scaling(n: int, s) -> float:
    """
    Factor (n!/pi^n)^(s/2) mapping Omega_{m,s} onto {||xi'||^2 < (1 - ||z||^2)^((n+1)s)}.
    For s = 1/(n+1) the image is B^{n+m}.
    """
    return ball_origin_value(n) ** (float(s) / 2)
