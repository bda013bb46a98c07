"""
Bivariate Taylor jets.

A :class:`Jet2` holds the normalized Taylor coefficients
a[i, j] = d^{i+j} f / (dt1^i dt2^j) / (i! j!) at a base point, for
0 <= i <= P and 0 <= j <= Q. Arithmetic propagates them forward, so a mixed
partial of a composed expression is read off as a[P, Q] * P! * Q!.
Base points and values may be complex.
"""
import math
from collections.abc import Callable

import numpy as np
from scipy.signal import convolve2d

from bergman_core.core.exceptions import NonInvertibleSeries

from .truncated import _is_integer, scalar_exp, scalar_log, scalar_power


class Jet2:
    __slots__ = ("coefficients", "base")

    def __init__(self, coefficients, base=(0.0, 0.0)):
        self.coefficients = np.asarray(coefficients, dtype=complex)
        if self.coefficients.ndim != 2:
            raise ValueError("Jet coefficients must form a 2-D array.")
        self.base = tuple(base)

    @classmethod
    def constant(cls, value, P: int, Q: int, base=(0.0, 0.0)) -> "Jet2":
        coefficients = np.zeros((P + 1, Q + 1), dtype=complex)
        coefficients[0, 0] = value
        return cls(coefficients, base)

    @classmethod
    def variable(cls, axis: int, P: int, Q: int, base=(0.0, 0.0)) -> "Jet2":
        """The coordinate t1 (axis 0) or t2 (axis 1) expanded at ``base``."""
        coefficients = np.zeros((P + 1, Q + 1), dtype=complex)
        coefficients[0, 0] = base[axis]
        if axis == 0 and P >= 1:
            coefficients[1, 0] = 1
        if axis == 1 and Q >= 1:
            coefficients[0, 1] = 1
        return cls(coefficients, base)

    @property
    def shape(self) -> tuple[int, int]:
        P, Q = self.coefficients.shape
        return P - 1, Q - 1

    @property
    def value(self):
        return self.coefficients[0, 0]

    def mixed_partial(self, P: int, Q: int):
        """d^{P+Q} f / dt1^P dt2^Q at the base point."""
        return self.coefficients[P, Q] * math.factorial(P) * math.factorial(Q)

    def _like(self, coefficients) -> "Jet2":
        return Jet2(coefficients, self.base)

    def _lift(self, other) -> "Jet2":
        if isinstance(other, Jet2):
            return other
        return Jet2.constant(other, *self.shape, base=self.base)

    def __neg__(self):
        return self._like(-self.coefficients)

    def __add__(self, other):
        return self._like(self.coefficients + self._lift(other).coefficients)

    __radd__ = __add__

    def __sub__(self, other):
        return self._like(self.coefficients - self._lift(other).coefficients)

    def __rsub__(self, other):
        return self._like(self._lift(other).coefficients - self.coefficients)

    def __mul__(self, other):
        if not isinstance(other, Jet2):
            return self._like(self.coefficients * other)
        P, Q = self.shape
        product = convolve2d(self.coefficients, other.coefficients)
        return self._like(product[: P + 1, : Q + 1])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Jet2):
            return self * other.real_pow(-1)
        return self._like(self.coefficients / other)

    def __rtruediv__(self, other):
        return self.real_pow(-1) * other

    def __pow__(self, exponent):
        return self.real_pow(exponent)

    def compose_taylor(self, taylor) -> "Jet2":
        """
        phi(f) for phi(f0 + h) = sum_k taylor[k] h^k, where f0 is the value of
        this jet. Terms beyond total order P + Q vanish since h is nilpotent.
        """
        P, Q = self.shape
        h = self - self.value
        result = Jet2.constant(taylor[0], P, Q, self.base)
        power = Jet2.constant(1, P, Q, self.base)
        for k in range(1, min(len(taylor), P + Q + 1)):
            power = power * h
            result = result + power * taylor[k]
        return result

    def real_pow(self, c) -> "Jet2":
        f0 = complex(self.value)
        if f0 == 0 and not (_is_integer(c) and c >= 0):
            raise NonInvertibleSeries(
                "Jet with zero value has no power with this exponent.",
                details={"exponent": str(c)},
            )
        order = sum(self.shape)
        taylor = []
        binomial = 1.0
        for k in range(order + 1):
            taylor.append(binomial * scalar_power(f0, c - k) if f0 != 0 else _zero_power(c, k))
            binomial *= (c - k) / (k + 1)
        return self.compose_taylor(taylor)

    def exp(self) -> "Jet2":
        e0 = scalar_exp(complex(self.value))
        order = sum(self.shape)
        return self.compose_taylor([e0 / math.factorial(k) for k in range(order + 1)])

    def log(self) -> "Jet2":
        f0 = complex(self.value)
        if f0 == 0:
            raise NonInvertibleSeries("Logarithm of a jet with zero value.")
        order = sum(self.shape)
        taylor = [scalar_log(f0)]
        taylor.extend((-1) ** (k + 1) / (k * f0**k) for k in range(1, order + 1))
        return self.compose_taylor(taylor)

    def __repr__(self):
        return f"Jet2(shape={self.shape}, base={self.base}, value={self.value})"


def _zero_power(c, k: int):
    """Taylor coefficient k of x**c at x = 0 for a non-negative integer c."""
    return 1.0 if k == int(c) else 0.0


def jet_mixed_partial(
    expression: Callable[[Jet2, Jet2], Jet2], P: int, Q: int, base=(0.0, 0.0)
):
    """
    d^{P+Q} f / dt1^P dt2^Q at ``base`` for ``f = expression(t1, t2)``.

    ``expression`` receives the two coordinate jets and must combine them with
    jet arithmetic only.
    """
    t1 = Jet2.variable(0, P, Q, base)
    t2 = Jet2.variable(1, P, Q, base)
    result = expression(t1, t2)
    if not isinstance(result, Jet2):
        return 0.0
    return result.mixed_partial(P, Q)
