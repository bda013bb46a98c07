"""
Truncated univariate power series.

Coefficients may be floats, complex numbers, mpmath numbers or Fractions; the
arithmetic never changes their kind except where an irrational constant
(a real power or logarithm of the constant term) is unavoidable.
"""
import cmath
import math
from fractions import Fraction
from numbers import Integral, Rational

import mpmath

from bergman_core.core.exceptions import NonInvertibleSeries


def _is_integer(c) -> bool:
    if isinstance(c, Integral):
        return True
    if isinstance(c, Rational):
        return c.denominator == 1
    try:
        return float(c) == int(c)
    except (TypeError, ValueError, OverflowError):
        return False


def _is_mp(x) -> bool:
    return isinstance(x, mpmath.mpf | mpmath.mpc)


def scalar_power(x, c):
    """x**c on the principal branch, keeping the numeric kind of x when possible."""
    if _is_integer(c):
        return x ** int(c)
    if x == 1:
        return x
    if _is_mp(x):
        return mpmath.power(x, c)
    if isinstance(x, complex) or x < 0:
        return complex(x) ** complex(c)
    return float(x) ** float(c)


def scalar_exp(x):
    if _is_mp(x):
        return mpmath.exp(x)
    if isinstance(x, complex):
        return cmath.exp(x)
    return math.exp(x)


def scalar_log(x):
    if _is_mp(x):
        return mpmath.log(x)
    if isinstance(x, complex):
        return cmath.log(x)
    return math.log(x)


class TruncatedSeries:
    """
    Power series a_0 + a_1 x + ... + a_R x^R known exactly through order R.

    Results of binary operations are truncated at the smaller order.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients, order: int | None = None):
        values = list(coefficients)
        if order is not None:
            zero = values[0] * 0 if values else 0
            values = (values + [zero] * (order + 1 - len(values)))[: order + 1]
        if not values:
            raise ValueError("A truncated series needs at least one coefficient.")
        self.coefficients = tuple(values)

    @classmethod
    def constant(cls, value, order: int) -> "TruncatedSeries":
        return cls([value], order)

    @classmethod
    def linear(cls, a, b, order: int) -> "TruncatedSeries":
        """a + b*x"""
        return cls([a, b], order)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @property
    def constant_term(self):
        return self.coefficients[0]

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __getitem__(self, index):
        return self.coefficients[index]

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coefficients, order)

    def _zero(self):
        return self.coefficients[0] * 0

    def __neg__(self):
        return TruncatedSeries(-c for c in self.coefficients)

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            order = min(self.order, other.order)
            return TruncatedSeries(
                a + b for a, b in zip(self.coefficients[: order + 1], other.coefficients)
            )
        values = list(self.coefficients)
        values[0] = values[0] + other
        return TruncatedSeries(values)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries(c * other for c in self.coefficients)
        order = min(self.order, other.order)
        f, g = self.coefficients, other.coefficients
        product = []
        for n in range(order + 1):
            total = self._zero()
            for k in range(n + 1):
                total += f[k] * g[n - k]
            product.append(total)
        return TruncatedSeries(product)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.real_pow(-1)
        return TruncatedSeries(c / other for c in self.coefficients)

    def __pow__(self, exponent):
        return self.real_pow(exponent)

    def real_pow(self, c) -> "TruncatedSeries":
        """
        f**c through the same order.

        Uses g_n = 1/(n f_0) * sum_{k=1}^{n} (k(c+1) - n) f_k g_{n-k}, which
        needs f_0 != 0. A vanishing constant term is only allowed for
        non-negative integer c.
        """
        f = self.coefficients
        f0 = f[0]
        if _is_mp(f0) and isinstance(c, Fraction):
            c = mpmath.mpf(c.numerator) / c.denominator
        if f0 == 0:
            if _is_integer(c) and c >= 0:
                return self._integer_pow(int(c))
            raise NonInvertibleSeries(
                "Series with zero constant term has no power with this exponent.",
                details={"exponent": str(c)},
            )
        if not _is_integer(c) and not isinstance(f0, complex | mpmath.mpc) and f0 < 0:
            raise NonInvertibleSeries(
                "Non-integer power of a series with negative constant term.",
                details={"exponent": str(c), "constant_term": str(f0)},
            )
        g = [scalar_power(f0, c)]
        for n in range(1, self.order + 1):
            total = g[0] * 0
            for k in range(1, n + 1):
                total += (k * (c + 1) - n) * f[k] * g[n - k]
            g.append(total / (n * f0))
        return TruncatedSeries(g)

    def _integer_pow(self, exponent: int) -> "TruncatedSeries":
        result = TruncatedSeries.constant(self._zero() + 1, self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def exp(self) -> "TruncatedSeries":
        f = self.coefficients
        g = [scalar_exp(f[0])]
        for n in range(1, self.order + 1):
            total = g[0] * 0
            for k in range(1, n + 1):
                total += k * f[k] * g[n - k]
            g.append(total / n)
        return TruncatedSeries(g)

    def log(self) -> "TruncatedSeries":
        f = self.coefficients
        f0 = f[0]
        if f0 == 0:
            raise NonInvertibleSeries("Logarithm of a series with zero constant term.")
        g = [scalar_log(f0)]
        for n in range(1, self.order + 1):
            total = f[n] * 1
            for k in range(1, n):
                total -= k * g[k] * f[n - k] / n
            g.append(total / f0)
        return TruncatedSeries(g)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """self(inner(x)) for an inner series with zero constant term."""
        if inner.constant_term != 0:
            raise ValueError("Composition needs an inner series without constant term.")
        order = min(self.order, inner.order)
        inner = inner.truncate(order)
        result = TruncatedSeries.constant(self.coefficients[order], order)
        for c in reversed(self.coefficients[:order]):
            result = result * inner + c
        return result

    def __call__(self, x):
        result = x * 0
        for c in reversed(self.coefficients):
            result = result * x + c
        return result

    def __repr__(self):
        return f"TruncatedSeries({list(self.coefficients)!r})"


def series_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product through the smaller truncation order."""
    return f * g


def series_real_pow(f: TruncatedSeries, c) -> TruncatedSeries:
    """Coefficients of f**c through the truncation order of f."""
    return f.real_pow(c)
