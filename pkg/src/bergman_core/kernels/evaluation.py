"""
Dispatch from a DomainSpec to its kernel, plus interior point sampling.
"""
import math
from collections.abc import Callable
from fractions import Fraction

import numpy as np

from bergman_core.algebra.rationals import format_rational

from .ball import ball_kernel, check_in_ball
from .egg import check_in_egg, egg_coefficients, egg_kernel
from .hartogs import check_in_hartogs, hartogs_coefficients, hartogs_kernel
from .specs import DomainSpec, as_point

KernelFunction = Callable[[np.ndarray, np.ndarray], complex]


def kernel_function(spec: DomainSpec, **options) -> KernelFunction:
    """A callable K(point1, point2) with coefficients computed once."""
    if spec.kind == "ball":
        return lambda z, w: ball_kernel(spec.n, z, w)
    if spec.kind == "hartogs":
        coefficients = hartogs_coefficients(spec.n, spec.m, spec.s)
        return lambda z, w: hartogs_kernel(spec, z, w, coefficients)
    coefficients = egg_coefficients(spec.n)
    return lambda z, w: egg_kernel(spec, z, w, coefficients, **options)


def evaluate_kernel(spec: DomainSpec, point1, point2=None, **options) -> complex:
    point2 = point1 if point2 is None else point2
    return kernel_function(spec, **options)(as_point(point1), as_point(point2))


def check_in_domain(spec: DomainSpec, point, name: str = "point") -> None:
    if spec.kind == "ball":
        check_in_ball(as_point(point), name)
    elif spec.kind == "hartogs":
        check_in_hartogs(spec, point, name)
    else:
        check_in_egg(spec, point, name)


def origin_annotation(spec: DomainSpec) -> str | None:
    """
    Exact form of K(0, 0) where it is a rational multiple of a power of pi:
    "2/pi^2" for B^2, "2/pi^(5/2)" for Omega_{1,1/2} over B^1.
    """
    n = spec.n
    if spec.kind == "ball":
        return _pi_term(Fraction(math.factorial(n)), Fraction(n))
    if spec.kind == "hartogs" and spec.s != 0:
        coefficients = hartogs_coefficients(n, spec.m, spec.s)
        exponent = spec.m * spec.s + 1
        if math.factorial(n) != 1 and exponent.denominator != 1:
            return None
        constant = Fraction(math.factorial(n)) ** int(exponent) if exponent.denominator == 1 else 1
        return _pi_term(constant * coefficients.S, n * exponent + spec.m)
    return None


def _pi_term(constant: Fraction, power: Fraction) -> str:
    power_text = format_rational(power)
    if power.denominator != 1:
        power_text = f"({power_text})"
    pi = "pi" if power == 1 else f"pi^{power_text}"
    if constant.denominator == 1:
        return f"{constant.numerator}/{pi}"
    return f"{constant.numerator}/({constant.denominator}*{pi})"


def sample_interior_points(
    spec: DomainSpec, count: int, rng: np.random.Generator, depth: float = 0.5
) -> list[np.ndarray]:
    """
    Random points with every group well inside its boundary: each group's
    share of the defining inequality is at most ``depth``.
    """
    points = []
    for _ in range(count):
        groups = [_random_direction(size, rng) for size in spec.blocks]
        radii = rng.uniform(0.0, depth, size=len(groups))
        z = groups[0] * math.sqrt(radii[0] * depth)
        room = 1 - radii[0] * depth
        parts = [z]
        if spec.kind == "hartogs":
            bound = float(spec.s) * (spec.n + 1)
            limit = (math.factorial(spec.n) / math.pi**spec.n) ** (-float(spec.s)) * room**bound
            parts.append(groups[1] * math.sqrt(radii[1] * limit))
        elif spec.kind == "egg":
            share1 = radii[1] * room / 4
            share2 = radii[2] * room / 4
            parts.append(groups[1] * math.sqrt(share1))
            parts.append(groups[2] * math.sqrt(share2 ** (1 / float(spec.k))))
        point = np.concatenate(parts)
        check_in_domain(spec, point)
        points.append(point)
    return points


def _random_direction(size: int, rng: np.random.Generator) -> np.ndarray:
    vector = rng.normal(size=size) + 1j * rng.normal(size=size)
    return vector / np.linalg.norm(vector)
