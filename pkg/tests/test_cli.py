"""
End-to-end tests of the management commands and the run configuration.
"""
import json
from io import StringIO

import pytest
from django.core.management import call_command
from factories import RunConfigDataFactory, RunConfigFactory
from freezegun import freeze_time

from bergman_core.core.exceptions import SchemaViolation
from bergman_core.reports.config import RunConfig
from bergman_core.reports.runner import run

ONE_THIRD = {"domain": "hartogs", "n": 1, "m": 1, "s": "1/3", "lam": "2", "N": 5}
BALL_EXPONENT = {"domain": "hartogs", "n": 1, "m": 1, "s": "1/2", "lam": "3/4", "N": 3}
EGG_KERNEL = {
    "command": "kernel",
    "spec": {"domain": "egg", "n": 1, "p": 1, "q": 1, "k": "2"},
    "points": ["0.1,0.2j,0.3"],
}
DISC_ORACLE = {
    "command": "oracle_compare",
    "spec": {"domain": "ball", "n": 1},
    "samples": 3,
    "truncation": 12,
}


def invoke(name, **options):
    """Run a command and return (exit status, stdout, stderr)."""
    out, err = StringIO(), StringIO()
    try:
        call_command(name, stdout=out, stderr=err, **options)
        status = 0
    except SystemExit as exc:
        status = exc.code
    return status, out.getvalue(), err.getvalue()


class TestKernelCommand:
    def test_ball_origin(self):
        status, out, _ = invoke("kernel", domain="ball", n=2, at="0,0", no_timestamp=True)

        assert status == 0
        report = json.loads(out)
        assert report["result"]["exact_form"] == "2/pi^2"
        assert report["result"]["normalization"] == "lebesgue"
        assert report["result"]["value"]["imag"] == 0
        assert "timestamp" not in report["provenance"]

    def test_two_points(self):
        status, out, _ = invoke(
            "kernel", domain="ball", n=1, at="0.5", to="0.5", no_timestamp=True
        )
        assert status == 0
        report = json.loads(out)
        assert "exact_form" not in report["result"]
        assert report["provenance"]["config"]["points"] == ["0.5", "0.5"]

    def test_point_outside(self):
        status, out, err = invoke("kernel", domain="ball", n=1, at="1.5")
        assert status == 1
        assert out == ""
        assert json.loads(err)["error"]["code"] == "outside_domain"

    def test_missing_point(self):
        status, _, err = invoke("kernel", domain="ball", n=2)
        assert status == 1
        assert json.loads(err)["error"]["code"] == "schema_violation"


class TestDiastasisCommand:
    def test_diagonal_vanishes(self):
        status, out, _ = invoke(
            "diastasis", domain="ball", n=1, at="0.3", to="0.3", no_timestamp=True
        )
        assert status == 0
        assert json.loads(out)["result"]["value"] == pytest.approx(0.0, abs=1e-14)

    def test_scaled_by_lambda(self):
        status, out, _ = invoke(
            "diastasis", domain="ball", n=1, at="0", to="0.5", lam="1/2", no_timestamp=True
        )
        result = json.loads(out)["result"]
        assert status == 0
        assert result["scale"] == "1/2"
        assert result["scaled"] == pytest.approx(result["value"] / 2)


class TestRigidityCommand:
    def test_certified(self):
        status, out, _ = invoke("rigidity", no_timestamp=True, **BALL_EXPONENT)
        report = json.loads(out)

        assert status == 0
        assert report["result"]["conclusion"] == "ball_certified"
        assert report["checks"]["T2_constant"] is True
        assert report["truncation"] == 30

    def test_obstruction_exit_status(self):
        status, out, _ = invoke("rigidity", no_timestamp=True, **ONE_THIRD)
        report = json.loads(out)

        assert status == 2
        assert report["result"]["conclusion"] == "obstruction_found"
        assert report["checks"]["zero_locus_matches"] is False
        assert report["result"]["polynomials"]["epsilon"] == 3

    def test_decimal_exponent_refused(self):
        options = dict(ONE_THIRD, s="0.5")
        status, out, err = invoke("rigidity", **options)

        assert status == 1
        assert out == ""
        error = json.loads(err)["error"]
        assert error["code"] == "schema_violation"
        assert "s" in error["details"]["spec"]

    def test_tolerance_option(self):
        status, out, _ = invoke("rigidity", no_timestamp=True, tol=1e-8, **BALL_EXPONENT)
        assert status == 0
        assert json.loads(out)["tolerances"] == {"calabi": 1e-8}

    def test_report_key_order(self):
        _, out, _ = invoke("rigidity", **BALL_EXPONENT)
        report = json.loads(out)
        assert list(report) == [
            "spec",
            "result",
            "checks",
            "truncation",
            "tolerances",
            "provenance",
        ]

    @freeze_time("2026-01-01")
    def test_timestamp(self):
        _, out, _ = invoke("rigidity", **BALL_EXPONENT)
        provenance = json.loads(out)["provenance"]
        assert provenance["timestamp"] == "2026-01-01T00:00:00+00:00"
        assert provenance["version"] == "0.1.0"

    def test_timestamps_disabled_in_settings(self, numerics_settings):
        numerics_settings["REPORT_TIMESTAMPS"] = False
        _, out, _ = invoke("rigidity", **BALL_EXPONENT)
        assert "timestamp" not in json.loads(out)["provenance"]

    def test_output_file(self, tmp_path):
        target = tmp_path / "report.json"
        status, out, _ = invoke("rigidity", output=str(target), **BALL_EXPONENT)

        assert status == 0
        assert out == ""
        report = json.loads(target.read_text())
        assert report["result"]["conclusion"] == "ball_certified"
        assert report["provenance"]["config"]["output"] == str(target)

    def test_config_file(self, tmp_path):
        path = tmp_path / "run.json"
        data = RunConfigDataFactory(
            spec={"domain": "hartogs", "n": 1, "m": 1, "s": "1/2", "lambda": "3/4", "N": 3}
        )
        del data["command"]
        path.write_text(json.dumps(data))

        status, out, _ = invoke("rigidity", config=str(path))
        report = json.loads(out)
        assert status == 0
        assert report["provenance"]["config"]["command"] == "rigidity"
        assert report["result"]["conclusion"] == "ball_certified"

    def test_unwritable_output(self, tmp_path):
        target = tmp_path / "missing" / "report.json"
        status, out, err = invoke("rigidity", output=str(target), **BALL_EXPONENT)

        assert status == 1
        assert out == ""
        error = json.loads(err)["error"]
        assert error["code"] == "output_not_writable"
        assert error["details"]["output"] == str(target)
        assert not target.exists()

    def test_identical_runs_give_identical_bytes(self):
        first = invoke("rigidity", no_timestamp=True, **ONE_THIRD)
        second = invoke("rigidity", no_timestamp=True, **ONE_THIRD)
        assert first == second

    @pytest.mark.parametrize("content", [None, "{not json", "[1, 2]"])
    def test_bad_config_file(self, tmp_path, content):
        path = tmp_path / "run.json"
        if content is not None:
            path.write_text(content)
        status, _, err = invoke("rigidity", config=str(path))
        assert status == 1
        assert json.loads(err)["error"]["code"] == "schema_violation"


class TestCalabiCommand:
    def test_csv_table(self):
        status, out, _ = invoke("calabi", format="csv", truncation=30, **ONE_THIRD)
        lines = out.strip().splitlines()

        assert status == 0
        assert lines[0] == "index,value_exact,value_decimal"
        assert lines[1] == "0,0,0"
        assert lines[2].startswith("1,14/15*C,")
        assert lines[3].startswith("2,13/225*C^2,")
        assert len(lines) == 32

    def test_json_diagnostic(self):
        status, out, _ = invoke("calabi", no_timestamp=True, **BALL_EXPONENT)
        report = json.loads(out)

        assert status == 0
        assert report["result"]["mu"] == "9/16"
        assert report["result"]["exponent_ratio"] == "3/16"
        assert report["checks"]["is_psd"] in (True, False)
        assert report["tolerances"] == {"calabi": 1e-10}

    def test_csv_only_for_calabi(self):
        status, _, err = invoke("rigidity", format="csv", **ONE_THIRD)
        assert status == 1
        assert "format" in json.loads(err)["error"]["details"]


class TestOracleCompareCommand:
    def test_disc(self):
        status, out, _ = invoke(
            "oracle_compare", domain="ball", n=1, samples=3, truncation=12, no_timestamp=True
        )
        report = json.loads(out)

        assert status == 0
        assert report["truncation"] == 12
        assert report["result"]["samples"] == 3
        assert report["result"]["quadrature"]["degree_cutoff"] == 12
        assert report["tolerances"] == {"refinement": 1e-9, "tail": 1e-6}
        assert report["result"]["max_kernel_deviation"] < 1e-5

    def test_cutoff_below_minimum(self):
        status, _, err = invoke("oracle_compare", domain="ball", n=1, truncation=4)
        assert status == 1
        assert json.loads(err)["error"]["code"] == "parameter_out_of_range"


class TestSweepCommand:
    def test_law_table(self):
        status, out, _ = invoke(
            "sweep", n=1, max_numerator=2, max_denominator=2, no_timestamp=True
        )
        report = json.loads(out)

        assert status == 0
        assert [row["s"] for row in report["result"]["rows"]] == ["1/2", "1", "2"]
        assert report["checks"]["law_consistent"] is True
        assert "conclusion" not in report["result"]["rows"][0]

    def test_with_reports(self):
        status, out, _ = invoke(
            "sweep",
            n=1,
            lam="3/4",
            N=3,
            max_numerator=2,
            max_denominator=2,
            no_timestamp=True,
        )
        rows = json.loads(out)["result"]["rows"]

        assert status == 0
        conclusions = {row["s"]: row["conclusion"] for row in rows}
        assert conclusions == {
            "1/2": "ball_certified",
            "1": "obstruction_found",
            "2": "obstruction_found",
        }

    def test_unwritable_output(self, tmp_path):
        target = tmp_path / "missing" / "sweep.json"
        status, _, err = invoke(
            "sweep", n=1, max_numerator=1, max_denominator=1, output=str(target)
        )
        assert status == 1
        assert json.loads(err)["error"]["code"] == "output_not_writable"

    def test_lambda_needs_target(self):
        status, _, err = invoke("sweep", n=1, lam="3/4")
        assert status == 1
        assert json.loads(err)["error"]["code"] == "parameter_out_of_range"


class TestRunConfig:
    def test_round_trip(self):
        config = RunConfigFactory()
        assert RunConfig.from_dict(config.to_dict()) == config

    def test_points_round_trip(self):
        config = RunConfigFactory(
            command="kernel", spec={"domain": "ball", "n": 2}, points=["0.1,0.2j"]
        )
        assert config.points == ((0.1 + 0j, 0.2j),)
        assert RunConfig.from_dict(config.to_dict()) == config

    def test_unknown_key(self):
        with pytest.raises(SchemaViolation) as excinfo:
            RunConfig.from_dict(RunConfigDataFactory(colour="red"))
        assert "colour" in excinfo.value.details

    def test_float_rational_refused(self):
        data = RunConfigDataFactory(
            spec={"domain": "hartogs", "n": 1, "m": 1, "s": 0.5, "lambda": "2", "N": 5}
        )
        with pytest.raises(SchemaViolation) as excinfo:
            RunConfig.from_dict(data)
        assert "s" in excinfo.value.details["spec"]

    def test_unknown_tolerance(self):
        with pytest.raises(SchemaViolation):
            RunConfig.from_dict(RunConfigDataFactory(tolerances={"bogus": 1.0}))

    def test_wrong_point_dimension(self):
        data = RunConfigDataFactory(
            command="kernel", spec={"domain": "ball", "n": 2}, points=["0"]
        )
        with pytest.raises(SchemaViolation):
            RunConfig.from_dict(data)

    def test_run_returns_report(self):
        result = run(RunConfigFactory())
        assert result.exit_status == 0
        assert not result.error
        assert result.report["result"]["exponent_ratio"] == "1/3"
        assert result.report["checks"]["verdict"]

    @pytest.mark.parametrize(
        "overrides", [{}, EGG_KERNEL, DISC_ORACLE], ids=["calabi", "kernel", "oracle_compare"]
    )
    def test_identical_configs_give_identical_bytes(self, overrides):
        first = run(RunConfigFactory(**overrides))
        second = run(RunConfigFactory(**overrides))
        assert not first.error
        assert first.content == second.content

    @freeze_time("2026-03-01 12:00:00")
    def test_identical_bytes_with_timestamp(self):
        first = run(RunConfigFactory(timestamp=True))
        second = run(RunConfigFactory(timestamp=True))
        assert first.content == second.content

    def test_unexpected_error_envelope(self, mocker):
        mocker.patch.dict(
            "bergman_core.reports.runner.HANDLERS",
            {"calabi": mocker.Mock(side_effect=RuntimeError("boom"))},
        )
        result = run(RunConfigFactory())

        assert result.exit_status == 1
        assert result.error
        assert result.report["error"]["code"] == "internal_error"
        assert json.loads(result.content)["error"]["message"] == "An unexpected error occurred."
