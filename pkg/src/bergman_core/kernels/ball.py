"""
Bergman kernel of the unit ball and its standard automorphisms.
"""
import math

import numpy as np

from bergman_core.core.exceptions import OutsideDomain

from .specs import as_point, hermitian_inner, squared_norm


def ball_volume(n: int) -> float:
    """Lebesgue volume pi^n / n! of B^n."""
    return math.pi**n / math.factorial(n)


def ball_origin_value(n: int) -> float:
    """K_{B^n}(0, 0) = n! / pi^n."""
    return 1.0 / ball_volume(n)


def check_in_ball(z, name: str = "point", radius_squared: float = 1.0) -> None:
    norm = squared_norm(z)
    if not norm < radius_squared:
        raise OutsideDomain(
            f"{name} is not inside the open ball.",
            details={"point": name, "squared_norm": norm, "radius_squared": radius_squared},
        )


def ball_generic_norm(n: int, z, w) -> complex:
    """N(z, w) = 1 - <z, w>; equals (vol * K(z, z))^(-1/(n+1)) on the diagonal."""
    z, w = as_point(z), as_point(w)
    check_in_ball(z, "z")
    check_in_ball(w, "w")
    return 1 - hermitian_inner(z, w)


def ball_kernel_power(n: int, z, w, exponent) -> complex:
    """
    K_{B^n}(z, w)**exponent on the principal branch, i.e.
    (n!/pi^n)**exponent * (1 - <z, w>)**(-(n+1)*exponent).
    """
    exponent = float(exponent)
    generic = ball_generic_norm(n, z, w)
    return ball_origin_value(n) ** exponent * complex(generic) ** (-(n + 1) * exponent)


def ball_kernel(n: int, z, w) -> complex:
    """K_{B^n}(z, w) = (n!/pi^n) (1 - <z, w>)^(-(n+1))."""
    return ball_origin_value(n) * ball_generic_norm(n, z, w) ** (-(n + 1))


def ball_automorphism(a, z) -> np.ndarray:
    """
    The involutive automorphism phi_a of B^n exchanging 0 and a:
    phi_a(z) = (a - P_a z - sqrt(1 - |a|^2) Q_a z) / (1 - <z, a>).
    """
    a, z = as_point(a), as_point(z)
    check_in_ball(a, "a")
    return (a - _linear_part(a) @ z) / (1 - hermitian_inner(z, a))


def ball_automorphism_jacobian(a, z) -> np.ndarray:
    """Complex Jacobian matrix of phi_a at z."""
    a, z = as_point(a), as_point(z)
    A = _linear_part(a)
    denominator = 1 - hermitian_inner(z, a)
    numerator = a - A @ z
    return (-A * denominator + np.outer(numerator, a.conj())) / denominator**2


def ball_automorphism_jacobian_det(a, z) -> complex:
    return complex(np.linalg.det(ball_automorphism_jacobian(a, z)))


def _linear_part(a: np.ndarray) -> np.ndarray:
    """P_a + sqrt(1 - |a|^2) Q_a."""
    n = a.size
    norm = squared_norm(a)
    if norm == 0:
        return np.eye(n, dtype=complex)
    projection = np.outer(a, a.conj()) / norm
    return projection + math.sqrt(1 - norm) * (np.eye(n) - projection)
