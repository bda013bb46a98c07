"""
Exact algebraic constraints on Omega_{m,s} over B^n.

Everything is expressed in Y = C X so that T1 and T2 have rational
coefficients; divisibility and constancy do not depend on the scaling, and the
pole X = 1/C becomes Y = 1.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from bergman_core.algebra.homogeneous import hartogs_base_polynomial
from bergman_core.algebra.polynomials import LinearFactor, RationalPolynomial
from bergman_core.algebra.rationals import format_rational
from bergman_core.calabi.expansion import slice_polynomial
from bergman_core.core.exceptions import IrrationalParameter, ParameterOutOfRange
from bergman_core.kernels.hartogs import HartogsCoefficients, hartogs_coefficients

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DivisibilityPair:
    """
    T1 = (1 - Y)^(delta(n+m+1)) and T2 = (sum_j c'(s, j)(j+m)! (1 - Y)^(n-j))^delta,
    where lambda/(N+1) = delta/epsilon in lowest terms, with the verdicts of
    the exact checks.
    """

    T1: RationalPolynomial
    T2: RationalPolynomial
    delta: int
    epsilon: int
    top_coeff_nonzero: bool
    T2_divides_T1: bool
    T2_constant: bool
    lower_coefficients_vanish: bool
    T2_at_pole: Fraction
    expected_pole_value: Fraction

    @property
    def pole_value_matches(self) -> bool:
        return self.T2_at_pole == self.expected_pole_value

    def to_dict(self) -> dict:
        return {
            "T1": str(self.T1),
            "T2": str(self.T2),
            "delta": self.delta,
            "epsilon": self.epsilon,
            "T2_at_pole": format_rational(self.T2_at_pole),
            "expected_pole_value": format_rational(self.expected_pole_value),
        }


def check_algebraic_constraints(
    coefficients: HartogsCoefficients, n: int, m: int, lam, N: int
) -> DivisibilityPair:
    if not isinstance(lam, Rational) or isinstance(lam, bool):
        raise IrrationalParameter(
            "Exact constraints need a rational lambda.", details={"lambda": repr(lam)}
        )
    if (n, m) != (coefficients.n, coefficients.m):
        raise ParameterOutOfRange(
            "Coefficients were computed for different dimensions.",
            details={"n": n, "m": m, "coefficients": [coefficients.n, coefficients.m]},
        )
    if coefficients.s == 0:
        raise ParameterOutOfRange("Constraints need s != 0.", details={"s": "0"})

    ratio = Fraction(lam) / (N + 1)
    delta, epsilon = ratio.numerator, ratio.denominator
    d = coefficients.degree

    T1 = RationalPolynomial.from_factors([LinearFactor(1, -1)] * (delta * (d + m + 1)))
    T2 = slice_polynomial(coefficients) ** delta
    pair = DivisibilityPair(
        T1=T1,
        T2=T2,
        delta=delta,
        epsilon=epsilon,
        top_coeff_nonzero=coefficients.c[d] != 0,
        T2_divides_T1=T2.divides(T1),
        T2_constant=T2.is_constant(),
        lower_coefficients_vanish=all(c == 0 for c in coefficients.c[:d]),
        T2_at_pole=T2(Fraction(1)),
        expected_pole_value=coefficients.weight(d) ** delta,
    )
    logger.debug(
        "Checked algebraic constraints",
        extra={
            "n": n,
            "m": m,
            "s": str(coefficients.s),
            "delta": delta,
            "epsilon": epsilon,
            "T2_constant": pair.T2_constant,
            "T2_divides_T1": pair.T2_divides_T1,
        },
    )
    return pair


def zero_locus_s(n: int, s) -> bool:
    """
    True when the roots -i/((n+1)s) of b(k) are exactly -1, ..., -n, which
    happens iff s = 1/(n+1).
    """
    if s == 0:
        raise ParameterOutOfRange("Zero locus needs s != 0.", details={"s": "0"})
    roots = Counter(hartogs_base_polynomial(n, s).roots())
    return roots == Counter(Fraction(-i) for i in range(1, n + 1))


@dataclass(frozen=True)
class CoefficientLawRow:
    n: int
    s: Fraction
    lower_coefficients_vanish: bool
    zero_locus_matches: bool
    is_ball_exponent: bool

    @property
    def consistent(self) -> bool:
        return self.lower_coefficients_vanish == self.zero_locus_matches == self.is_ball_exponent

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "s": format_rational(self.s),
            "lower_coefficients_vanish": self.lower_coefficients_vanish,
            "zero_locus_matches": self.zero_locus_matches,
            "is_ball_exponent": self.is_ball_exponent,
            "consistent": self.consistent,
        }


def coefficient_law_row(n: int, s) -> CoefficientLawRow:
    """The three conditions equivalent to s = 1/(n+1), each computed on its own."""
    s = Fraction(s)
    coefficients = hartogs_coefficients(n, 1, s)
    return CoefficientLawRow(
        n=n,
        s=s,
        lower_coefficients_vanish=all(c == 0 for c in coefficients.c[: coefficients.degree]),
        zero_locus_matches=zero_locus_s(n, s),
        is_ball_exponent=s == Fraction(1, n + 1),
    )


def rational_grid(max_numerator: int, max_denominator: int) -> list[Fraction]:
    """Distinct a/b with 1 <= a <= max_numerator and 1 <= b <= max_denominator, ascending."""
    values = {
        Fraction(a, b) for a in range(1, max_numerator + 1) for b in range(1, max_denominator + 1)
    }
    return sorted(values)
