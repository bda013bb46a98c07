"""
Reduction of egg domains to Hartogs-type domains, and base pullback constants.

E(p, q, B^n, k) is biholomorphic, through the linear map
(z, xi1, xi2) -> ((z, xi1), vol(B^{n+p})^(s/2) xi2), to the Hartogs domain
(B^{n+p})_{q, s} with s = 1/(k(n+p+1)). The reduction is checked on sampled
pairs by comparing diastasis values, which are invariant under
biholomorphisms and blind to the kernel normalization.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from bergman_core.algebra.rationals import as_rational, format_rational
from bergman_core.core.exceptions import OutsideDomain, ParameterOutOfRange
from bergman_core.diastasis.functions import bergman_diastasis
from bergman_core.kernels.ball import ball_kernel, ball_volume
from bergman_core.kernels.evaluation import kernel_function, sample_interior_points
from bergman_core.kernels.specs import DomainSpec, as_point

logger = logging.getLogger(__name__)


def egg_reduced_exponent(n: int, p: int, k) -> Fraction:
    """Hartogs exponent 1/(k g(B^{n+p})) = 1/(k(n+p+1)) of the reduced egg."""
    return 1 / (as_rational(k, "k") * (n + p + 1))


def egg_type_one_exponent(q: int, k, n: int) -> Fraction:
    """Y(q, B^n, k) = {||xi||^(2k) < 1 - ||z||^2} is Hartogs with s = 1/(k g)."""
    if q < 1:
        raise ParameterOutOfRange("q must be at least 1.", details={"q": q})
    return 1 / (as_rational(k, "k") * (n + 1))


def hartogs_pullback_constant(m: int, s) -> Fraction:
    return m * as_rational(s, "s") + 1


def egg_pullback_constant(n: int, p: int, q: int, k) -> Fraction:
    """p/g + q/(k g) + 1 with g = n + 1."""
    g = n + 1
    return Fraction(p, g) + Fraction(q) / (as_rational(k, "k") * g) + 1


def _fibre_map(spec: DomainSpec, exponent: Fraction):
    n_base = spec.n + spec.p
    scale = ball_volume(n_base) ** (float(exponent) / 2)

    def apply(point):
        z, xi1, xi2 = spec.split(point)
        return np.concatenate([z, xi1, scale * xi2])

    return apply


@dataclass(frozen=True)
class EggReductionReport:
    n: int
    p: int
    q: int
    k: Fraction
    samples: int
    computed_exponent: Fraction
    stated_exponent: Fraction
    max_deviation: float
    stated_exponent_deviation: float | None
    ball_deviation: float | None

    @property
    def exponents_agree(self) -> bool:
        return self.computed_exponent == self.stated_exponent

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "q": self.q,
            "k": format_rational(self.k),
            "samples": self.samples,
            "computed_exponent": format_rational(self.computed_exponent),
            "stated_exponent": format_rational(self.stated_exponent),
            "exponents_agree": self.exponents_agree,
            "max_deviation": self.max_deviation,
            "stated_exponent_deviation": self.stated_exponent_deviation,
            "ball_deviation": self.ball_deviation,
        }


def egg_reduction_check(
    n: int, p: int, q: int, k, samples: int, rng: np.random.Generator | None = None, **options
) -> EggReductionReport:
    """
    Compare the egg diastasis with the diastasis of the reduced Hartogs domain
    at ``samples`` random pairs.

    The subscript 1/k is evaluated as well; its mapped points may leave the
    Hartogs domain, in which case that deviation is reported as None. For
    k = 1 the egg is the ball B^{n+p+q} and is compared with it directly.
    """
    k = as_rational(k, "k")
    rng = rng if rng is not None else np.random.default_rng(0)
    egg = DomainSpec.egg(n, p, q, k)
    computed = egg_reduced_exponent(n, p, k)
    stated = 1 / k

    points = sample_interior_points(egg, 2 * samples, rng)
    pairs = list(zip(points[::2], points[1::2]))
    egg_kernel = kernel_function(egg, **options)
    egg_values = [bergman_diastasis(egg_kernel, z, w) for z, w in pairs]

    def deviation(exponent: Fraction) -> float:
        target = DomainSpec.hartogs(n + p, q, exponent)
        kernel = kernel_function(target)
        mapping = _fibre_map(egg, exponent)
        return max(
            abs(bergman_diastasis(kernel, mapping(z), mapping(w)) - value)
            for (z, w), value in zip(pairs, egg_values)
        )

    max_deviation = deviation(computed)
    try:
        stated_deviation = deviation(stated)
    except OutsideDomain:
        stated_deviation = None

    ball_deviation = None
    if k == 1:
        dimension = n + p + q
        ball = lambda z, w: ball_kernel(dimension, z, w)  # noqa: E731
        ball_deviation = max(
            abs(bergman_diastasis(ball, z, w) - value) for (z, w), value in zip(pairs, egg_values)
        )

    report = EggReductionReport(
        n=n,
        p=p,
        q=q,
        k=k,
        samples=samples,
        computed_exponent=computed,
        stated_exponent=stated,
        max_deviation=max_deviation,
        stated_exponent_deviation=stated_deviation,
        ball_deviation=ball_deviation,
    )
    logger.info(
        "Egg reduction checked",
        extra={
            "n": n,
            "p": p,
            "q": q,
            "k": str(k),
            "max_deviation": max_deviation,
            "stated_exponent_deviation": stated_deviation,
        },
    )
    return report


@dataclass(frozen=True)
class PullbackReport:
    spec: DomainSpec
    expected: Fraction
    ratios: tuple[float, ...]

    @property
    def max_deviation(self) -> float:
        return max(abs(r - float(self.expected)) for r in self.ratios)

    def to_dict(self) -> dict:
        return {
            "spec": self.spec.to_dict(),
            "expected": format_rational(self.expected),
            "max_deviation": self.max_deviation,
            "samples": len(self.ratios),
        }


def base_pullback_check(
    spec: DomainSpec, samples: int, rng: np.random.Generator | None = None, **options
) -> PullbackReport:
    """
    Ratio of the domain diastasis on the zero-fibre slice to the base diastasis
    of B^n, at random base pairs.
    """
    if spec.kind == "hartogs":
        expected = hartogs_pullback_constant(spec.m, spec.s)
    elif spec.kind == "egg":
        expected = egg_pullback_constant(spec.n, spec.p, spec.q, spec.k)
    else:
        raise ParameterOutOfRange(
            "Pullback constants exist for Hartogs and egg domains.", details={"domain": spec.kind}
        )
    rng = rng if rng is not None else np.random.default_rng(0)
    kernel = kernel_function(spec, **options)
    base = lambda z, w: ball_kernel(spec.n, z, w)  # noqa: E731
    padding = np.zeros(spec.dimension - spec.n, dtype=complex)

    ratios = []
    while len(ratios) < samples:
        z, w = (_random_base_point(spec.n, rng) for _ in range(2))
        base_value = bergman_diastasis(base, z, w)
        if base_value < 1e-3:
            continue
        value = bergman_diastasis(
            kernel, np.concatenate([z, padding]), np.concatenate([w, padding])
        )
        ratios.append(value / base_value)
    return PullbackReport(spec=spec, expected=expected, ratios=tuple(ratios))


def _random_base_point(n: int, rng: np.random.Generator) -> np.ndarray:
    direction = rng.normal(size=n) + 1j * rng.normal(size=n)
    direction /= np.linalg.norm(direction)
    return as_point(direction * math.sqrt(rng.uniform(0.0, 0.5)))
