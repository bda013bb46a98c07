"""
Dense univariate polynomials with exact rational coefficients.

A polynomial may also carry a factored form, a product of linear factors
(alpha + beta*x). Zero-locus questions are answered from the factored form so
no root finding is ever needed.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest

from .rationals import format_rational


@dataclass(frozen=True)
class LinearFactor:
    """The linear polynomial alpha + beta*x."""

    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))

    @property
    def root(self) -> Fraction | None:
        if self.beta == 0:
            return None
        return -self.alpha / self.beta

    def as_polynomial(self) -> "RationalPolynomial":
        return RationalPolynomial((self.alpha, self.beta))


def _strip(coefficients) -> tuple[Fraction, ...]:
    values = [Fraction(c) for c in coefficients]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


class RationalPolynomial:
    """
    Immutable polynomial sum(coefficients[i] * x**i).

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coefficients", "factored_form")

    def __init__(self, coefficients=(), factored_form=None):
        object.__setattr__(self, "coefficients", _strip(coefficients))
        if factored_form is not None:
            factored_form = tuple(factored_form)
            expanded = RationalPolynomial.from_factors(factored_form).coefficients
            if expanded != self.coefficients:
                raise ValueError("Factored form does not expand to the given coefficients.")
        object.__setattr__(self, "factored_form", factored_form)

    def __setattr__(self, name, value):
        raise AttributeError("RationalPolynomial is immutable.")

    @classmethod
    def from_factors(cls, factors) -> "RationalPolynomial":
        """Expand a product of linear factors; the empty product is 1."""
        factors = tuple(factors)
        result = [Fraction(1)]
        for factor in factors:
            shifted = [Fraction(0)] + [c * factor.beta for c in result]
            scaled = [c * factor.alpha for c in result] + [Fraction(0)]
            result = [a + b for a, b in zip(scaled, shifted)]
        polynomial = cls(result)
        object.__setattr__(polynomial, "factored_form", factors)
        return polynomial

    @classmethod
    def constant(cls, value) -> "RationalPolynomial":
        return cls((value,))

    @classmethod
    def variable(cls) -> "RationalPolynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_constant(self) -> bool:
        return self.degree <= 0

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return Fraction(0)

    def roots(self) -> tuple[Fraction, ...]:
        """Roots read off the factored form, with multiplicity."""
        if self.factored_form is None:
            raise ValueError("Roots are only available for polynomials in factored form.")
        return tuple(f.root for f in self.factored_form if f.root is not None)

    def __call__(self, x):
        result = x * 0
        for c in reversed(self.coefficients):
            result = result * x + (c if isinstance(x, Fraction | int) else _to_kind(c, x))
        return result

    def __eq__(self, other):
        if isinstance(other, RationalPolynomial):
            return self.coefficients == other.coefficients
        if isinstance(other, int | Fraction):
            return self.coefficients == _strip((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def __neg__(self):
        return RationalPolynomial(-c for c in self.coefficients)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return RationalPolynomial(
            a + b for a, b in zip_longest(self.coefficients, other.coefficients, fillvalue=0)
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RationalPolynomial()
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return RationalPolynomial(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("Polynomial powers must be non-negative.")
        result = RationalPolynomial.constant(1)
        base, remaining = self, exponent
        while remaining:
            if remaining & 1:
                result = result * base
            base = base * base
            remaining >>= 1
        if self.factored_form is not None and not self.is_zero():
            object.__setattr__(result, "factored_form", self.factored_form * exponent)
        return result

    def __divmod__(self, divisor):
        divisor = _coerce(divisor)
        if divisor is None or divisor.is_zero():
            raise ZeroDivisionError("Polynomial division by zero.")
        remainder = list(self.coefficients)
        quotient = [Fraction(0)] * max(len(remainder) - divisor.degree, 1)
        lead = divisor.leading_coefficient
        while len(remainder) - 1 >= divisor.degree and any(remainder):
            shift = len(remainder) - 1 - divisor.degree
            factor = remainder[-1] / lead
            quotient[shift] = factor
            for i, c in enumerate(divisor.coefficients):
                remainder[shift + i] -= factor * c
            remainder.pop()
            while remainder and remainder[-1] == 0:
                remainder.pop()
        return RationalPolynomial(quotient), RationalPolynomial(remainder)

    def divides(self, other: "RationalPolynomial") -> bool:
        """True when ``self`` divides ``other`` exactly."""
        return divmod(other, self)[1].is_zero()

    def compose(self, inner: "RationalPolynomial") -> "RationalPolynomial":
        """Return self(inner(x))."""
        result = RationalPolynomial()
        for c in reversed(self.coefficients):
            result = result * inner + c
        return result

    def __repr__(self):
        return f"RationalPolynomial({self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            power = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            coeff = format_rational(c)
            terms.append(coeff if not power else (power if c == 1 else f"{coeff}*{power}"))
        return " + ".join(terms)


def _coerce(value) -> RationalPolynomial | None:
    if isinstance(value, RationalPolynomial):
        return value
    if isinstance(value, int | Fraction):
        return RationalPolynomial.constant(value)
    return None


def _to_kind(c: Fraction, x):
    """Convert a rational coefficient to the numeric kind of ``x``."""
    if isinstance(x, float | complex):
        return float(c)
    try:
        return type(x)(c.numerator) / c.denominator
    except TypeError:
        return float(c)


def rising_factorial_polynomial(j: int) -> RationalPolynomial:
    """The basis element (x+1)_j = (x+1)(x+2)...(x+j) in factored form."""
    return RationalPolynomial.from_factors(LinearFactor(i, 1) for i in range(1, j + 1))


def to_rising_factorial_basis(polynomial: RationalPolynomial) -> tuple[Fraction, ...]:
    """
    Coordinates c_0..c_d with polynomial(x) = sum c_j (x+1)_j.

    Each basis element is monic of its own degree, so the top coefficient is
    peeled off repeatedly.
    """
    remainder = RationalPolynomial(polynomial.coefficients)
    coordinates = [Fraction(0)] * (polynomial.degree + 1)
    for j in range(polynomial.degree, -1, -1):
        c = remainder.coefficient(j)
        if c:
            coordinates[j] = c
            remainder = remainder - c * rising_factorial_polynomial(j)
    return tuple(coordinates)


def from_rising_factorial_basis(coordinates) -> RationalPolynomial:
    """Inverse of :func:`to_rising_factorial_basis`."""
    result = RationalPolynomial()
    for j, c in enumerate(coordinates):
        if c:
            result = result + Fraction(c) * rising_factorial_polynomial(j)
    return result
