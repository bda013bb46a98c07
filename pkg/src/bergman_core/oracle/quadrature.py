"""
Monomial norms on the model domains by nested Gauss-Legendre quadrature.

Every supported domain is a complete Reinhardt domain whose defining function
depends only on the squared norms X_g = ||z_g||^2 of its coordinate groups.
Integrating out the sphere directions of each group gives

    ||z^a||^2 = pi^d prod_g a_g! / (|a_g| + d_g - 1)! * I(A)

where I(A) is an integral over the profile in the X_g alone, depending only
on the block degrees A_g = |a_g|. The profile integrals factor into Beta-type
integrals int_0^1 x^a (1 - x)^b dx which are evaluated on [0, 1] with
Gauss-Legendre nodes. For rational b = u/q the substitution 1 - x = w^q makes
the integrand a polynomial.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from bergman_core.algebra.multiindex import MultiIndex
from bergman_core.core.conf import numerics
from bergman_core.core.exceptions import ParameterOutOfRange, QuadratureNotConverged
from bergman_core.kernels.specs import DomainSpec

logger = logging.getLogger(__name__)

GAUSS_LEGENDRE = "gauss-legendre"
MIN_DEGREE_CUTOFF = 10


@dataclass(frozen=True)
class QuadratureSpec:
    """
    Attributes:
        grid_size: Gauss-Legendre nodes per radial level on the first pass
        degree_cutoff: Total degree D of the monomial sum
        refinement_tolerance: Relative agreement required between grids G and 2G
        max_refinements: Grid doublings tried before giving up
    """

    grid_size: int = 64
    degree_cutoff: int = 48
    rule: str = GAUSS_LEGENDRE
    refinement_tolerance: float = 1e-9
    max_refinements: int = 4

    def __post_init__(self):
        if self.rule != GAUSS_LEGENDRE:
            raise ParameterOutOfRange(f"Unknown quadrature rule '{self.rule}'.")
        if self.grid_size < 2:
            raise ParameterOutOfRange(
                "Grid size must be at least 2.", details={"grid_size": self.grid_size}
            )
        if self.degree_cutoff < MIN_DEGREE_CUTOFF:
            raise ParameterOutOfRange(
                f"Degree cutoff must be at least {MIN_DEGREE_CUTOFF}.",
                details={"degree_cutoff": self.degree_cutoff},
            )

    @classmethod
    def from_settings(cls, **overrides) -> "QuadratureSpec":
        config = numerics()
        values = {
            "grid_size": config["ORACLE_GRID_SIZE"],
            "degree_cutoff": config["ORACLE_DEGREE_CUTOFF"],
            "refinement_tolerance": config["ORACLE_REFINEMENT_TOLERANCE"],
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "grid_size": self.grid_size,
            "degree_cutoff": self.degree_cutoff,
            "refinement_tolerance": self.refinement_tolerance,
        }


@lru_cache(maxsize=16)
def unit_interval_rule(size: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights mapped from [-1, 1] to [0, 1]."""
    nodes, weights = np.polynomial.legendre.leggauss(size)
    return (nodes + 1) / 2, weights / 2


@lru_cache(maxsize=None)
def beta_integral(a: int, b: Fraction, size: int) -> float:
    """int_0^1 x^a (1 - x)^b dx on ``size`` nodes, with 1 - x = w^q for b = u/q."""
    b = Fraction(b)
    nodes, weights = unit_interval_rule(size)
    q = b.denominator
    if q == 1:
        values = nodes**a * (1 - nodes) ** b.numerator
        return float(values @ weights)
    values = q * (1 - nodes**q) ** a * nodes ** (b.numerator + q - 1)
    return float(values @ weights)


def profile_integral(spec: DomainSpec, degrees: tuple[int, ...], size: int) -> float:
    """I(A) for block degrees A on one grid."""
    n = spec.n
    alpha = degrees[0] + n - 1
    if spec.kind == "ball":
        return beta_integral(alpha, Fraction(0), size)
    if spec.kind == "hartogs":
        if spec.s <= 0:
            raise ParameterOutOfRange(
                "The oracle integrates Hartogs domains with s > 0.", details={"s": str(spec.s)}
            )
        beta = degrees[1] + spec.m - 1
        c0 = (math.pi**n / math.factorial(n)) ** float(spec.s)
        exponent = (n + 1) * spec.s * (beta + 1)
        return (
            c0 ** (beta + 1)
            * beta_integral(alpha, exponent, size)
            * beta_integral(beta, Fraction(0), size)
        )
    beta = degrees[1] + spec.p - 1
    gamma = degrees[2] + spec.q - 1
    shift = Fraction(gamma + 1) / spec.k
    return (
        beta_integral(alpha, beta + 1 + shift, size)
        * beta_integral(beta, shift, size)
        * beta_integral(gamma, Fraction(0), size)
    )


def refined_profile_integral(
    spec: DomainSpec, degrees: tuple[int, ...], quad: QuadratureSpec
) -> float:
    """I(A) on grids G, 2G, 4G, ... until two successive grids agree."""
    size = quad.grid_size
    previous = profile_integral(spec, degrees, size)
    for _ in range(quad.max_refinements):
        size *= 2
        current = profile_integral(spec, degrees, size)
        if abs(current - previous) <= quad.refinement_tolerance * abs(current):
            return current
        logger.debug(
            "Refining quadrature grid",
            extra={"degrees": list(degrees), "grid_size": size, "spec": str(spec)},
        )
        previous = current
    logger.warning(
        "Quadrature refinement did not settle",
        extra={"degrees": list(degrees), "grid_size": size, "spec": str(spec)},
    )
    raise QuadratureNotConverged(
        "Successive grid refinements disagree.",
        details={"degrees": list(degrees), "grid_size": size},
    )


def block_prefactor(blocks: tuple[int, ...], parts: tuple[MultiIndex, ...]) -> float:
    """pi^d prod_g a_g! / (|a_g| + d_g - 1)!"""
    value = math.pi ** sum(blocks)
    for d, a in zip(blocks, parts):
        value *= a.factorial / math.factorial(a.degree + d - 1)
    return value


def split_multiindex(spec: DomainSpec, a) -> tuple[MultiIndex, ...]:
    a = MultiIndex(a)
    if len(a) != spec.dimension:
        raise ParameterOutOfRange(
            "Multi-index length must equal the domain dimension.",
            details={"length": len(a), "dimension": spec.dimension},
        )
    offsets = np.cumsum((0,) + spec.blocks)
    return tuple(MultiIndex(a[i:j]) for i, j in zip(offsets[:-1], offsets[1:]))


def monomial_norm(spec: DomainSpec, a, quad: QuadratureSpec | None = None) -> float:
    """Squared L^2 norm of z^a over the domain (Lebesgue measure)."""
    quad = quad or QuadratureSpec.from_settings()
    parts = split_multiindex(spec, a)
    degrees = tuple(part.degree for part in parts)
    return block_prefactor(spec.blocks, parts) * refined_profile_integral(spec, degrees, quad)


def domain_volume(spec: DomainSpec, quad: QuadratureSpec | None = None) -> float:
    return monomial_norm(spec, (0,) * spec.dimension, quad)
