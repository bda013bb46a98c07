"""
Tests for the exact constraints, egg reduction and the combined rigidity verdict.
"""
from fractions import Fraction

import pytest
from factories import EggSpecFactory, HartogsSpecFactory

from bergman_core.algebra.polynomials import RationalPolynomial
from bergman_core.calabi.criterion import CONSISTENT, IMMERSION_IMPOSSIBLE, INCONCLUSIVE
from bergman_core.core.exceptions import IrrationalParameter, ParameterOutOfRange, SchemaViolation
from bergman_core.kernels.hartogs import hartogs_coefficients
from bergman_core.kernels.specs import DomainSpec
from bergman_core.rigidity.constraints import (
    check_algebraic_constraints,
    coefficient_law_row,
    rational_grid,
    zero_locus_s,
)
from bergman_core.rigidity.reduction import (
    base_pullback_check,
    egg_pullback_constant,
    egg_reduced_exponent,
    egg_reduction_check,
    egg_type_one_exponent,
    hartogs_pullback_constant,
)
from bergman_core.rigidity.reports import (
    BALL_CERTIFIED,
    OBSTRUCTION_FOUND,
    OUTSIDE_SCOPE,
    rigidity_report,
)
from bergman_core.rigidity.tasks import coefficient_law_task, rigidity_report_task


class TestCoefficientLaw:
    def test_rational_grid(self):
        grid = rational_grid(2, 2)
        assert grid == [Fraction(1, 2), Fraction(1), Fraction(2)]

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_three_conditions_agree_on_grid(self, n):
        for s in rational_grid(6, 6):
            row = coefficient_law_row(n, s)
            assert row.consistent, row.to_dict()
            assert row.is_ball_exponent == (s == Fraction(1, n + 1))

    @pytest.mark.parametrize(
        "n, s, expected",
        [
            (1, Fraction(1, 2), True),
            (2, Fraction(1, 3), True),
            (2, Fraction(1, 2), False),
            (3, Fraction(1, 2), False),
        ],
    )
    def test_zero_locus(self, n, s, expected):
        assert zero_locus_s(n, s) is expected

    def test_zero_locus_refuses_zero(self):
        with pytest.raises(ParameterOutOfRange):
            zero_locus_s(2, 0)

    def test_row_dict(self):
        data = coefficient_law_row(1, "1/2").to_dict()
        assert data == {
            "n": 1,
            "s": "1/2",
            "lower_coefficients_vanish": True,
            "zero_locus_matches": True,
            "is_ball_exponent": True,
            "consistent": True,
        }


class TestAlgebraicConstraints:
    def test_one_third_does_not_divide(self):
        coefficients = hartogs_coefficients(1, 1, Fraction(1, 3))
        pair = check_algebraic_constraints(coefficients, 1, 1, 2, 5)

        assert pair.T2 == RationalPolynomial((1, Fraction(-1, 5)))
        assert pair.T1 == RationalPolynomial((1, -3, 3, -1))
        assert (pair.delta, pair.epsilon) == (1, 3)
        assert pair.top_coeff_nonzero
        assert not pair.T2_constant
        assert not pair.T2_divides_T1
        assert not pair.lower_coefficients_vanish
        assert pair.T2_at_pole == Fraction(4, 5)
        assert pair.pole_value_matches

    def test_ball_exponent(self):
        coefficients = hartogs_coefficients(1, 1, Fraction(1, 2))
        pair = check_algebraic_constraints(coefficients, 1, 1, Fraction(3, 4), 3)

        assert (pair.delta, pair.epsilon) == (3, 16)
        assert pair.T2 == 1
        assert pair.T2_constant
        assert pair.T2_divides_T1
        assert pair.lower_coefficients_vanish
        assert pair.pole_value_matches
        assert pair.T1.degree == 9

    def test_dict_form(self):
        coefficients = hartogs_coefficients(1, 1, Fraction(1, 3))
        data = check_algebraic_constraints(coefficients, 1, 1, 2, 5).to_dict()
        assert data["delta"] == 1
        assert data["epsilon"] == 3
        assert data["T2_at_pole"] == "4/5"
        assert data["expected_pole_value"] == "4/5"

    def test_float_lambda_refused(self):
        coefficients = hartogs_coefficients(1, 1, Fraction(1, 2))
        with pytest.raises(IrrationalParameter):
            check_algebraic_constraints(coefficients, 1, 1, 0.75, 3)

    def test_dimension_mismatch(self):
        coefficients = hartogs_coefficients(1, 1, Fraction(1, 2))
        with pytest.raises(ParameterOutOfRange):
            check_algebraic_constraints(coefficients, 2, 1, 1, 4)

    def test_pole_value_and_divisibility_on_random_parameters(self, rng):
        grid = rational_grid(6, 6)
        for _ in range(30):
            n, m = int(rng.integers(1, 4)), int(rng.integers(1, 3))
            s = grid[int(rng.integers(len(grid)))]
            lam = Fraction(int(rng.integers(1, 7)), int(rng.integers(1, 7)))
            N = n + m + int(rng.integers(0, 5))

            pair = check_algebraic_constraints(hartogs_coefficients(n, m, s), n, m, lam, N)
            assert pair.T2_at_pole == pair.expected_pole_value != 0
            assert pair.T2_divides_T1 == pair.T2_constant == (s == Fraction(1, n + 1))


class TestRigidityReport:
    def test_ball_exponent_certified(self):
        report = rigidity_report(HartogsSpecFactory(target=True))

        assert report.conclusion == BALL_CERTIFIED
        assert not report.obstruction
        assert all(
            report.checks[name]
            for name in ("s_nonzero", "T2_divides_T1", "T2_constant", "zero_locus_matches")
        )
        assert report.polynomials["T2"] == str(RationalPolynomial.constant(1))
        assert report.truncation == 30

    def test_two_dimensional_base_certified(self):
        spec = DomainSpec.hartogs(2, 1, Fraction(1, 3), lam=1, N=3)
        assert rigidity_report(spec).conclusion == BALL_CERTIFIED

    def test_one_third_obstruction(self):
        spec = DomainSpec.hartogs(1, 1, Fraction(1, 3), lam=2, N=5)
        report = rigidity_report(spec)

        assert report.conclusion == OBSTRUCTION_FOUND
        assert report.obstruction
        assert report.checks["zero_locus_matches"] is False
        assert report.checks["T2_divides_T1"] is False
        assert report.checks["top_coeff_nonzero"] is True
        assert report.polynomials["delta"] == 1
        assert report.polynomials["epsilon"] == 3

    def test_calabi_verdict_reported_alongside(self):
        report = rigidity_report(DomainSpec.hartogs(1, 1, Fraction(1, 3), lam=2, N=5))
        assert report.checks["calabi_verdict"] in (IMMERSION_IMPOSSIBLE, INCONCLUSIVE, CONSISTENT)
        assert report.calabi["precision"] == "double"
        assert report.errors == []

    def test_float_lambda_outside_scope(self):
        spec = HartogsSpecFactory(lam=0.75, N=3)
        report = rigidity_report(spec)
        assert report.conclusion == OUTSIDE_SCOPE
        assert report.checks == {"lambda_rational": False}
        assert not report.obstruction

    def test_zero_exponent_is_obstruction(self):
        spec = HartogsSpecFactory(s=0, lam=1, N=3)
        report = rigidity_report(spec)
        assert report.conclusion == OBSTRUCTION_FOUND
        assert report.checks == {"s_nonzero": False}

    def test_egg_reduced_to_ball_exponent(self):
        spec = EggSpecFactory(k=1, lam=1, N=3)
        report = rigidity_report(spec)
        assert report.conclusion == BALL_CERTIFIED
        assert report.reduction == {"n": 2, "m": 1, "s": "1/3", "stated_s": "1"}

    def test_egg_half_exponent_obstruction(self):
        spec = EggSpecFactory(k=Fraction(1, 2), lam=1, N=3)
        report = rigidity_report(spec)
        assert report.conclusion == OBSTRUCTION_FOUND
        assert report.reduction["s"] == "2/3"

    def test_ball_refused(self):
        with pytest.raises(ParameterOutOfRange):
            rigidity_report(DomainSpec.ball(2, lam=1, N=2))

    def test_missing_target(self):
        with pytest.raises(SchemaViolation):
            rigidity_report(HartogsSpecFactory())

    def test_tolerance_recorded(self):
        report = rigidity_report(HartogsSpecFactory(target=True), tol=1e-8)
        assert report.tolerances == {"calabi": 1e-8}

    def test_dict_key_order(self):
        data = rigidity_report(HartogsSpecFactory(target=True)).to_dict()
        assert list(data)[:5] == ["spec", "checks", "conclusion", "truncation", "tolerances"]
        assert data["spec"] == {
            "domain": "hartogs",
            "n": 1,
            "m": 1,
            "s": "1/2",
            "lambda": "3/4",
            "N": 3,
        }
        assert "reduction" not in data


class TestReduction:
    def test_constants(self):
        assert egg_reduced_exponent(1, 1, 2) == Fraction(1, 6)
        assert egg_type_one_exponent(1, 2, 1) == Fraction(1, 4)
        assert hartogs_pullback_constant(2, Fraction(1, 3)) == Fraction(5, 3)
        assert egg_pullback_constant(1, 1, 1, 2) == Fraction(7, 4)

    def test_type_one_needs_fibre(self):
        with pytest.raises(ParameterOutOfRange):
            egg_type_one_exponent(0, 2, 1)

    def test_egg_reduction_unit_exponent(self, rng):
        report = egg_reduction_check(1, 1, 1, 1, samples=3, rng=rng)
        assert report.computed_exponent == Fraction(1, 3)
        assert report.max_deviation < 1e-7
        assert report.ball_deviation < 1e-7

    def test_egg_reduction_exponent_two(self, rng):
        report = egg_reduction_check(1, 1, 1, 2, samples=3, rng=rng)
        assert report.computed_exponent == Fraction(1, 6)
        assert not report.exponents_agree
        assert report.max_deviation < 1e-6
        assert report.ball_deviation is None
        assert report.to_dict()["stated_exponent"] == "1/2"

    @pytest.mark.parametrize(
        "spec,bound",
        [
            (DomainSpec.hartogs(2, 1, Fraction(1, 3)), 1e-10),
            (DomainSpec.hartogs(1, 2, Fraction(3, 2)), 1e-10),
            (DomainSpec.egg(1, 1, 1, 2), 1e-8),
            (DomainSpec.egg(2, 1, 2, Fraction(3, 2)), 1e-8),
        ],
        ids=str,
    )
    def test_base_pullback(self, spec, bound, rng):
        report = base_pullback_check(spec, samples=20, rng=rng)
        assert report.max_deviation < bound
        assert report.to_dict()["samples"] == 20

    def test_pullback_refuses_ball(self, rng):
        with pytest.raises(ParameterOutOfRange):
            base_pullback_check(DomainSpec.ball(2), samples=1, rng=rng)


class TestTasks:
    def test_rigidity_task_runs_eagerly(self):
        spec = HartogsSpecFactory(target=True)
        data = rigidity_report_task.delay(spec.to_dict()).get()
        assert data["conclusion"] == BALL_CERTIFIED
        assert data["spec"] == spec.to_dict()

    def test_coefficient_law_task(self):
        row = coefficient_law_task.delay(2, "1/3").get()
        assert row["consistent"] is True
        assert row["is_ball_exponent"] is True
