"""
Diastasis of Bergman metrics and of the complex space forms.
"""
import math
from dataclasses import dataclass
from fractions import Fraction

from bergman_core.core.exceptions import (
    LuQiKengViolation,
    OrthogonalPair,
    OutsideDomain,
    ParameterOutOfRange,
)
from bergman_core.kernels.specs import as_point, hermitian_inner, squared_norm


@dataclass(frozen=True)
class DiastasisValue:
    """Diastasis of the metric ``scale * g`` where ``value`` is the one of g."""

    value: float
    scale: Fraction | float = Fraction(1)

    @property
    def scaled(self) -> float:
        return float(self.scale) * self.value

    def rescaled(self, factor) -> "DiastasisValue":
        return DiastasisValue(self.value, self.scale * factor)


def bergman_diastasis(kernel, z, w) -> float:
    """
    log(K(z, z) K(w, w) / |K(z, w)|^2) for a kernel callable K(point1, point2).
    """
    z, w = as_point(z), as_point(w)
    kzz = kernel(z, z).real
    kww = kernel(w, w).real
    kzw = abs(kernel(z, w))
    if kzw == 0:
        raise LuQiKengViolation(details={"z": str(z.tolist()), "w": str(w.tolist())})
    return math.log(kzz) + math.log(kww) - 2 * math.log(kzw)


def hyperbolic_diastasis(b: float, z, w) -> float:
    """
    Diastasis of the complex hyperbolic space form F(N, b), b < 0, on the ball
    of radius 1/sqrt(-b):
    (1/b) [log(1 + b|z|^2) + log(1 + b|w|^2) - log|1 + b<z,w>|^2].
    """
    if not b < 0:
        raise ParameterOutOfRange("Hyperbolic diastasis needs b < 0.", details={"b": str(b)})
    b = float(b)
    radius_squared = -1 / b
    for name, point in (("z", z), ("w", w)):
        if not squared_norm(point) < radius_squared:
            raise OutsideDomain(
                f"{name} lies outside the model ball.",
                details={"point": name, "radius_squared": radius_squared},
            )
    cross = abs(1 + b * hermitian_inner(z, w))
    return (
        math.log(1 + b * squared_norm(z)) + math.log(1 + b * squared_norm(w)) - 2 * math.log(cross)
    ) / b


def projective_diastasis(b: float, Z, W) -> float:
    """(1/b) log(||Z||^2 ||W||^2 / |<Z, W>|^2) in homogeneous coordinates, b > 0."""
    if not b > 0:
        raise ParameterOutOfRange("Projective diastasis needs b > 0.", details={"b": str(b)})
    nz, nw = squared_norm(Z), squared_norm(W)
    if nz == 0 or nw == 0:
        raise ParameterOutOfRange("Homogeneous coordinates must be nonzero.")
    cross = abs(hermitian_inner(Z, W))
    if cross == 0:
        raise OrthogonalPair()
    return (math.log(nz) + math.log(nw) - 2 * math.log(cross)) / float(b)


def ball_as_hyperbolic_form(N: int, z):
    """Coordinates sqrt(N+1) z identifying (B^N, g_B) with the space form of b = -1/(N+1)."""
    return math.sqrt(N + 1) * as_point(z)
