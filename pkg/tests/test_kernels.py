import math
from fractions import Fraction

import numpy as np
import pytest
from factories import BallSpecFactory, EggSpecFactory, HartogsSpecFactory

from bergman_core.core.exceptions import (
    IrrationalParameter,
    OutsideDomain,
    ParameterOutOfRange,
    SchemaViolation,
    SeriesDivergence,
)
from bergman_core.diastasis.functions import bergman_diastasis
from bergman_core.kernels.ball import (
    ball_automorphism,
    ball_automorphism_jacobian_det,
    ball_kernel,
    ball_origin_value,
)
from bergman_core.kernels.egg import (
    egg_coefficients,
    egg_lambda_derivative,
    h_jm_closed_form_taylor,
    h_jm_taylor,
)
from bergman_core.kernels.evaluation import (
    check_in_domain,
    evaluate_kernel,
    kernel_function,
    origin_annotation,
    sample_interior_points,
)
from bergman_core.kernels.hartogs import hartogs_coefficients, hartogs_fibre_scaling
from bergman_core.kernels.specs import DomainSpec


def _random_ball_points(n, count, rng, radius=0.9):
    points = []
    for _ in range(count):
        direction = rng.normal(size=n) + 1j * rng.normal(size=n)
        direction /= np.linalg.norm(direction)
        points.append(direction * radius * math.sqrt(rng.uniform()))
    return points


class TestDomainSpec:
    def test_missing_parameter(self):
        with pytest.raises(SchemaViolation):
            DomainSpec(kind="hartogs", n=1, m=1)

    def test_parameter_not_applicable(self):
        with pytest.raises(SchemaViolation):
            DomainSpec(kind="ball", n=2, p=1)

    def test_unknown_domain(self):
        with pytest.raises(SchemaViolation):
            DomainSpec(kind="annulus", n=1)

    def test_hartogs_exponent_bound(self):
        with pytest.raises(ParameterOutOfRange):
            HartogsSpecFactory(s=Fraction(-1, 2))
        assert HartogsSpecFactory(s=Fraction(-1, 3)).s == Fraction(-1, 3)

    @pytest.mark.parametrize("m,s", [(2, Fraction(-1, 4)), (3, Fraction(-2, 5))])
    def test_hartogs_normalization_must_be_positive(self, m, s):
        with pytest.raises(ParameterOutOfRange) as excinfo:
            HartogsSpecFactory(m=m, s=s)
        assert excinfo.value.code == "parameter_out_of_range"

    def test_egg_exponent_positive(self):
        with pytest.raises(ParameterOutOfRange):
            EggSpecFactory(k=0)

    def test_decimal_exponent_refused(self):
        with pytest.raises(IrrationalParameter):
            HartogsSpecFactory(s=0.5)

    def test_target_dimension(self):
        with pytest.raises(ParameterOutOfRange):
            HartogsSpecFactory(lam=1, N=1)

    def test_float_lambda_is_kept(self):
        spec = HartogsSpecFactory(lam=0.75, N=3)
        assert spec.lam == 0.75

    def test_dimension_and_split(self):
        spec = EggSpecFactory(n=2, p=1, q=2)
        assert spec.blocks == (2, 1, 2)
        assert spec.dimension == 5
        z, xi1, xi2 = spec.split([0.1, 0.2, 0.3, 0.0, 0.1])
        assert len(z) == 2 and len(xi1) == 1 and len(xi2) == 2
        with pytest.raises(SchemaViolation):
            spec.split([0.1, 0.2])

    def test_dict_form(self):
        spec = HartogsSpecFactory(target=True)
        assert spec.to_dict() == {
            "domain": "hartogs",
            "n": 1,
            "m": 1,
            "s": "1/2",
            "lambda": "3/4",
            "N": 3,
        }
        assert DomainSpec.from_dict(spec.to_dict()) == spec
        assert str(spec) == "hartogs(n=1, m=1, s=1/2, lambda=3/4, N=3)"


class TestBallKernel:
    def test_origin_value(self):
        spec = BallSpecFactory(n=2)
        assert evaluate_kernel(spec, [0, 0]).real == pytest.approx(2 / math.pi**2, rel=1e-14)
        assert origin_annotation(spec) == "2/pi^2"

    def test_outside_point(self):
        with pytest.raises(OutsideDomain):
            ball_kernel(2, [0.8, 0.6], [0, 0])

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_kernel_has_no_log_term(self, n, rng):
        # K = phi / psi^(n+1) with phi = n!/pi^n and psi = 1 - |z|^2
        for z in _random_ball_points(n, 10, rng):
            psi = 1 - np.vdot(z, z).real
            expected = math.factorial(n) / math.pi**n / psi ** (n + 1)
            assert ball_kernel(n, z, z).real == pytest.approx(expected, rel=1e-13)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_transformation_rule(self, n, rng):
        a = _random_ball_points(n, 1, rng, radius=0.7)[0]
        points = _random_ball_points(n, 50, rng)
        for z, w in zip(points, points[1:] + points[:1]):
            left = (
                ball_kernel(n, ball_automorphism(a, z), ball_automorphism(a, w))
                * ball_automorphism_jacobian_det(a, z)
                * np.conj(ball_automorphism_jacobian_det(a, w))
            )
            assert abs(left - ball_kernel(n, z, w)) <= 1e-10 * abs(ball_kernel(n, z, w))

    def test_automorphism_is_involution(self, rng):
        a = _random_ball_points(3, 1, rng, radius=0.6)[0]
        z = _random_ball_points(3, 1, rng)[0]
        assert np.allclose(ball_automorphism(a, np.zeros(3)), a)
        assert np.allclose(ball_automorphism(a, a), 0)
        assert np.allclose(ball_automorphism(a, ball_automorphism(a, z)), z)


class TestHartogsKernel:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    @pytest.mark.parametrize("m", [1, 2])
    def test_ball_exponent_collapses_coefficients(self, n, m):
        coefficients = hartogs_coefficients(n, m, Fraction(1, n + 1))
        assert coefficients.c == (0,) * n + (Fraction(1, math.factorial(n)),)

    def test_coefficients_for_one_third(self):
        coefficients = hartogs_coefficients(1, 1, Fraction(1, 3))
        assert coefficients.c == (Fraction(1, 3), Fraction(2, 3))
        assert coefficients.S == Fraction(5, 3)
        assert coefficients.weights == (Fraction(1, 5), Fraction(4, 5))

    @pytest.mark.parametrize("s", [Fraction(1, 3), Fraction(3, 2), Fraction(2)])
    def test_weights_sum_to_one(self, s):
        assert sum(hartogs_coefficients(2, 2, s).weights) == 1

    def test_zero_exponent_refused(self):
        with pytest.raises(ParameterOutOfRange):
            hartogs_coefficients(1, 1, 0)

    @pytest.mark.parametrize("m,s", [(2, Fraction(-1, 4)), (3, Fraction(-2, 5))])
    def test_non_positive_normalization_refused(self, m, s):
        with pytest.raises(ParameterOutOfRange):
            hartogs_coefficients(1, m, s)

    def test_positive_expansion(self):
        assert hartogs_coefficients(2, 1, Fraction(1, 3)).positive_expansion
        assert hartogs_coefficients(1, 2, Fraction(3, 2)).positive_expansion
        assert not hartogs_coefficients(1, 1, Fraction(-1, 3)).positive_expansion

    def test_kernel_refuses_non_positive_expansion(self):
        spec = HartogsSpecFactory(s=Fraction(-1, 3))
        with pytest.raises(ParameterOutOfRange) as excinfo:
            evaluate_kernel(spec, [0, 0])
        assert excinfo.value.details["k"] == 1

    def test_origin_value(self):
        spec = HartogsSpecFactory()
        assert evaluate_kernel(spec, [0, 0]).real == pytest.approx(2 / math.pi**2.5, rel=1e-14)
        assert origin_annotation(spec) == "2/pi^(5/2)"

    def test_outside_point(self):
        spec = HartogsSpecFactory()
        with pytest.raises(OutsideDomain):
            evaluate_kernel(spec, [0.5, 2.0])

    @pytest.mark.parametrize("n,m", [(1, 1), (1, 2), (2, 1), (2, 2)])
    def test_ball_exponent_gives_ball_diastasis(self, n, m, rng):
        spec = HartogsSpecFactory(n=n, m=m, s=Fraction(1, n + 1))
        kernel = kernel_function(spec)
        scale = hartogs_fibre_scaling(n, spec.s)
        ball = lambda z, w: ball_kernel(n + m, z, w)  # noqa: E731

        def to_ball(point):
            return np.concatenate([point[:n], scale * point[n:]])

        points = sample_interior_points(spec, 40, rng)
        for z, w in zip(points[::2], points[1::2]):
            expected = bergman_diastasis(ball, to_ball(z), to_ball(w))
            assert bergman_diastasis(kernel, z, w) == pytest.approx(expected, abs=1e-9)


class TestEggKernel:
    def test_lambda_at_origin(self):
        coefficients = egg_coefficients(1)
        assert coefficients.bj == (6, -6, 1)
        assert egg_lambda_derivative(coefficients, 1, 1, 1, 0.0, 0.0) == pytest.approx(6.0)

    @pytest.mark.parametrize("n,p,q", [(1, 1, 1), (2, 1, 1)])
    def test_unit_exponent_gives_ball_diastasis(self, n, p, q, rng):
        spec = EggSpecFactory(n=n, p=p, q=q, k=1)
        kernel = kernel_function(spec)
        ball = lambda z, w: ball_kernel(n + p + q, z, w)  # noqa: E731
        points = sample_interior_points(spec, 20, rng)
        for z, w in zip(points[::2], points[1::2]):
            expected = bergman_diastasis(ball, z, w)
            assert bergman_diastasis(kernel, z, w) == pytest.approx(expected, abs=1e-7)

    @pytest.mark.parametrize(
        "radius,expected", [(0.6, 86.72), (0.7, 249.07), (0.8, 1143.75), (0.9, 16575.0)]
    )
    def test_resummation_beyond_series_tolerance(self, radius, expected):
        spec = EggSpecFactory()
        point = [0, 0, math.sqrt(radius)]

        value = evaluate_kernel(spec, point)
        closed = evaluate_kernel(spec, point, method="closed_form")
        assert value.real == pytest.approx(expected, rel=1e-3)
        assert value == pytest.approx(closed, rel=1e-12)
        with pytest.raises(SeriesDivergence):
            evaluate_kernel(spec, point, method="series")

    def test_series_and_resummation_agree(self):
        spec = EggSpecFactory()
        point = [0, 0, math.sqrt(0.5)]
        series = evaluate_kernel(spec, point, method="series")
        closed = evaluate_kernel(spec, point, method="closed_form")
        assert series == pytest.approx(closed, rel=1e-10)

    def test_method_from_settings(self, numerics_settings):
        numerics_settings["H_SERIES_METHOD"] = "series"
        with pytest.raises(SeriesDivergence):
            evaluate_kernel(EggSpecFactory(), [0, 0, math.sqrt(0.8)])

    def test_unknown_method(self):
        with pytest.raises(ParameterOutOfRange):
            evaluate_kernel(EggSpecFactory(), [0, 0, 0], method="pade")

    @pytest.mark.parametrize("p,q", [(1, 2), (2, 1)])
    def test_lambda_derivative_matches_finite_differences(self, p, q):
        coefficients = egg_coefficients(1)
        k, t1, t2, h = Fraction(2), 0.2, 0.3, 1e-5
        step = (h, 0.0) if p == 2 else (0.0, h)

        derivative = egg_lambda_derivative(coefficients, k, p, q, t1, t2)
        above = egg_lambda_derivative(coefficients, k, 1, 1, t1 + step[0], t2 + step[1])
        below = egg_lambda_derivative(coefficients, k, 1, 1, t1 - step[0], t2 - step[1])
        assert derivative == pytest.approx((above - below) / (2 * h), rel=1e-6)

    def test_h_series_matches_resummation(self):
        series, tail = h_jm_taylor(3, 1, 0.5, 0.3 + 0.1j, derivatives=2, order=64)
        closed = h_jm_closed_form_taylor(3, 1, Fraction(1, 2), 0.3 + 0.1j, derivatives=2)
        assert np.allclose(series, closed, rtol=1e-10)
        assert tail < 1e-12

    def test_fibre_rotations(self, rng):
        spec = EggSpecFactory(n=1, p=2, q=2, k=Fraction(3, 2))
        kernel = kernel_function(spec)
        u1, _ = np.linalg.qr(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
        u2, _ = np.linalg.qr(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))

        def rotate(point):
            return np.concatenate([point[:1], u1 @ point[1:3], u2 @ point[3:]])

        z, w = sample_interior_points(spec, 2, rng)
        expected = kernel(z, w)
        assert abs(kernel(rotate(z), rotate(w)) - expected) <= 1e-10 * abs(expected)

    def test_outside_point(self):
        with pytest.raises(OutsideDomain):
            evaluate_kernel(EggSpecFactory(), [0.5, 0.9, 0.1])


def test_sampled_points_are_interior(rng):
    for spec in (BallSpecFactory(), HartogsSpecFactory(s=Fraction(2)), EggSpecFactory()):
        for point in sample_interior_points(spec, 10, rng):
            check_in_domain(spec, point)


def test_origin_value_of_ball_constant():
    assert ball_origin_value(3) == pytest.approx(6 / math.pi**3)


KERNEL_SPECS = [
    DomainSpec.ball(2),
    DomainSpec.hartogs(1, 1, Fraction(1, 2)),
    DomainSpec.hartogs(1, 1, Fraction(1, 3)),
    DomainSpec.hartogs(2, 2, Fraction(3, 2)),
    DomainSpec.egg(1, 1, 1, 2),
    DomainSpec.egg(2, 2, 1, Fraction(3, 2)),
]


@pytest.mark.parametrize("spec", KERNEL_SPECS, ids=str)
def test_hermitian_symmetry(spec, rng):
    kernel = kernel_function(spec)
    points = sample_interior_points(spec, 20, rng)
    for z, w in zip(points[::2], points[1::2]):
        value = kernel(z, w)
        assert abs(value - kernel(w, z).conjugate()) <= 1e-12 * abs(value)


@pytest.mark.parametrize("spec", KERNEL_SPECS, ids=str)
def test_diagonal_positivity(spec, rng):
    kernel = kernel_function(spec)
    for point in sample_interior_points(spec, 100, rng):
        value = kernel(point, point)
        assert value.real > 0
        assert abs(value.imag) <= 1e-12 * value.real
