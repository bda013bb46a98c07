"""
Bergman kernel as the sum over orthogonal monomials, and its comparison with
the closed forms.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from bergman_core.algebra.multiindex import compositions
from bergman_core.core.conf import numerics
from bergman_core.core.exceptions import QuadratureNotConverged
from bergman_core.diastasis.functions import bergman_diastasis
from bergman_core.kernels.evaluation import check_in_domain, kernel_function, sample_interior_points
from bergman_core.kernels.specs import DomainSpec, as_point, hermitian_inner

from .quadrature import QuadratureSpec, refined_profile_integral

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleKernelValue:
    value: complex
    tail_estimate: float
    degree_cutoff: int


class MonomialKernel:
    """
    Truncated monomial expansion of the kernel for one domain.

    Summing sum_{|a_g| = A_g} (z_g conj(w_g))^(a_g) / a_g! = <z_g, w_g>^(A_g) / A_g!
    inside each coordinate group leaves a sum over block degrees:

        K(z, w) = sum_A prod_g <z_g, w_g>^(A_g) (A_g + d_g - 1)! / A_g! / (pi^d I(A))

    The profile integrals I(A) are computed once and reused for every point.
    """

    def __init__(
        self,
        spec: DomainSpec,
        quad: QuadratureSpec | None = None,
        tail_tolerance: float | None = None,
    ):
        self.spec = spec
        self.quad = quad or QuadratureSpec.from_settings()
        self.tail_tolerance = (
            numerics()["ORACLE_TAIL_TOLERANCE"] if tail_tolerance is None else tail_tolerance
        )
        self.levels = self._build_levels()

    def _build_levels(self) -> list[tuple[np.ndarray, np.ndarray]]:
        blocks = self.spec.blocks
        volume_factor = math.pi ** sum(blocks)
        levels = []
        for total in range(self.quad.degree_cutoff + 1):
            degrees = [tuple(A) for A in compositions(total, len(blocks))]
            weights = []
            for A in degrees:
                weight = 1.0 / (volume_factor * refined_profile_integral(self.spec, A, self.quad))
                for d, a in zip(blocks, A):
                    weight *= math.factorial(a + d - 1) / math.factorial(a)
                weights.append(weight)
            levels.append((np.array(degrees, dtype=int), np.array(weights)))
        logger.debug(
            "Built monomial kernel table",
            extra={"spec": str(self.spec), "degree_cutoff": self.quad.degree_cutoff},
        )
        return levels

    def level_sums(self, z, w) -> tuple[np.ndarray, np.ndarray]:
        """
        Contribution of each total degree 0..D, and the same sums with every
        inner product replaced by its modulus.
        """
        z, w = as_point(z), as_point(w)
        inners = np.array(
            [hermitian_inner(zg, wg) for zg, wg in zip(self.spec.split(z), self.spec.split(w))]
        )
        sums = np.zeros(len(self.levels), dtype=complex)
        majorants = np.zeros(len(self.levels))
        for total, (degrees, weights) in enumerate(self.levels):
            sums[total] = weights @ np.prod(inners**degrees, axis=1)
            majorants[total] = weights @ np.prod(np.abs(inners) ** degrees, axis=1)
        return sums, majorants

    def evaluate(self, z, w, tail_tolerance: float | None = None) -> OracleKernelValue:
        tail_tolerance = self.tail_tolerance if tail_tolerance is None else tail_tolerance
        sums, majorants = self.level_sums(z, w)
        value = complex(sums.sum())
        last, previous = majorants[-1], majorants[-2]
        rho = last / previous if previous else 0.0
        tail = math.inf if rho >= 1 else last * rho / (1 - rho)
        relative_tail = float(tail / majorants.sum())
        if relative_tail > tail_tolerance:
            raise QuadratureNotConverged(
                "Monomial sum tail exceeds the tolerance; the point is too close to the boundary.",
                details={"tail_estimate": relative_tail, "tolerance": tail_tolerance},
            )
        return OracleKernelValue(
            value=value, tail_estimate=relative_tail, degree_cutoff=self.quad.degree_cutoff
        )

    def __call__(self, z, w) -> complex:
        return self.evaluate(z, w).value


def oracle_kernel(spec: DomainSpec, z, w, quad: QuadratureSpec | None = None) -> OracleKernelValue:
    """sum_{|a| <= D} z^a conj(w^a) / ||z^a||^2 with a tail estimate."""
    check_in_domain(spec, z, "z")
    check_in_domain(spec, w, "w")
    return MonomialKernel(spec, quad).evaluate(z, w)


@dataclass(frozen=True)
class OracleComparison:
    spec: DomainSpec
    samples: int
    quadrature: QuadratureSpec
    normalized: bool
    max_kernel_deviation: float
    max_diastasis_deviation: float
    max_tail_estimate: float

    def to_dict(self) -> dict:
        return {
            "spec": self.spec.to_dict(),
            "samples": self.samples,
            "quadrature": self.quadrature.to_dict(),
            "compared_on": "ratio_to_origin" if self.normalized else "kernel_value",
            "max_kernel_deviation": self.max_kernel_deviation,
            "max_diastasis_deviation": self.max_diastasis_deviation,
            "max_tail_estimate": self.max_tail_estimate,
        }


def compare_with_closed_form(
    spec: DomainSpec,
    samples: int,
    rng: np.random.Generator | None = None,
    quad: QuadratureSpec | None = None,
    tail_tolerance: float | None = None,
) -> OracleComparison:
    """
    Relative deviation of the oracle from the closed-form kernel on the
    diagonal at random interior points, and absolute deviation of the
    diastasis between consecutive points.

    Egg kernels follow the unit-volume normalization, so for eggs the values
    K(z, z)/K(0, 0) are compared instead.
    """
    rng = rng if rng is not None else np.random.default_rng(0)
    quad = quad or QuadratureSpec.from_settings()
    oracle = MonomialKernel(spec, quad, tail_tolerance)
    closed = kernel_function(spec)
    normalized = spec.kind == "egg"
    origin = np.zeros(spec.dimension, dtype=complex)
    oracle_origin = oracle(origin, origin).real if normalized else 1.0
    closed_origin = closed(origin, origin).real if normalized else 1.0

    points = sample_interior_points(spec, samples, rng)
    kernel_deviation = 0.0
    worst_tail = 0.0
    for point in points:
        result = oracle.evaluate(point, point)
        worst_tail = max(worst_tail, result.tail_estimate)
        expected = closed(point, point).real / closed_origin
        observed = result.value.real / oracle_origin
        kernel_deviation = max(kernel_deviation, abs(observed - expected) / abs(expected))

    diastasis_deviation = 0.0
    for z, w in zip(points, points[1:]):
        diastasis_deviation = max(
            diastasis_deviation,
            abs(bergman_diastasis(oracle, z, w) - bergman_diastasis(closed, z, w)),
        )

    comparison = OracleComparison(
        spec=spec,
        samples=samples,
        quadrature=quad,
        normalized=normalized,
        max_kernel_deviation=kernel_deviation,
        max_diastasis_deviation=diastasis_deviation,
        max_tail_estimate=worst_tail,
    )
    logger.info(
        "Oracle comparison",
        extra={
            "spec": str(spec),
            "max_kernel_deviation": kernel_deviation,
            "max_diastasis_deviation": diastasis_deviation,
        },
    )
    return comparison
