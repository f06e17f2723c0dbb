import io
import json

import pytest

from schwarz.core.commands_backend import Commands_Backend, parse_rational_function
from schwarz.core.commands_frontend import Commands_Frontend
from schwarz.core.enum_classes import Exit_Status
from schwarz.core.errors import ParseError
from schwarz.core.records import CommandResult


@pytest.fixture
def stdout():
    return io.StringIO()


@pytest.fixture
def frontend(stdout):
    return Commands_Frontend(stdout=stdout)


def run(frontend, stdout, *argv) -> tuple[Exit_Status, CommandResult]:
    status = frontend.run(list(argv))
    lines = stdout.getvalue().splitlines()
    return status, CommandResult.model_validate_json(lines[-1]) if lines else None


def test_classify_equation_strongly_minimal(frontend, stdout):
    status, result = run(frontend, stdout, "classify-equation", "--inv-angles", "1/2,1/3,1/7")
    assert status == Exit_Status.OKAY
    assert result.command == "classify-equation"
    assert result.inputs == {"inv_angles": ["1/2", "1/3", "1/7"]}
    assert result.result == {"verdict": "StronglyMinimal"}


def test_classify_equation_witness(frontend, stdout):
    status, result = run(frontend, stdout, "classify-equation", "--inv-angles", "1/3,1/3,1/3")
    assert status == Exit_Status.OKAY
    assert result.result["verdict"] == "NotStronglyMinimal"
    assert result.result["witness"]["kind"] == "Condition1"
    assert result.result["witness"]["sum"] == "1"


def test_classify_equation_generic(frontend, stdout):
    status, result = run(frontend, stdout, "classify-equation", "--inv-angles", "generic")
    assert status == Exit_Status.OKAY
    assert result.result == {"verdict": "GenericStronglyMinimal"}


def test_classify_equation_parse_error(frontend, stdout):
    status, result = run(frontend, stdout, "classify-equation", "--inv-angles", "1/2,0.5,1/7")
    assert status == Exit_Status.USAGE
    assert result.result["error"] == "ParseError"
    assert result.result["position"] == 4
    assert result.status == 2


def test_classify_group(frontend, stdout):
    status, result = run(frontend, stdout, "classify-group", "--sig", "2,3,inf")
    assert status == Exit_Status.OKAY
    assert result.result["arithmetic"] is True
    assert result.result["maximal"] is True
    assert result.result["special_polynomials"] == "InfinitelyMany"


def test_classify_group_non_maximal(frontend, stdout):
    _, result = run(frontend, stdout, "classify-group", "--sig", "2,6,12")
    assert result.result["maximal"] is False
    assert result.result["in_M"] is True


def test_classify_group_parse_error(frontend, stdout):
    status, _ = run(frontend, stdout, "classify-group", "--sig", "1,3,7")
    assert status == Exit_Status.USAGE


@pytest.mark.parametrize("argv", [
    ["verify", "principal", "--inv-angles", "1/2,1/3,1/7", "--order", "40", "--tol", "1e-8"],
    ["verify", "riccati", "--inv-angles", "0,0,0", "--order", "40", "--tol", "1e-8"],
    ["verify", "star", "--inv-angles", "1/2,1/3,1/7"],
    ["verify", "pullback", "--inv-angles", "0,0,0", "--phi", "y^2", "--tol", "1e-8"],
])
def test_verify_passes(frontend, stdout, argv):
    status, result = run(frontend, stdout, *argv)
    assert status == Exit_Status.OKAY
    assert result.result["passed"] is True
    assert result.result["max_abs_residual"] < 1e-8


def test_verify_with_rational_function(frontend, stdout):
    status, result = run(
        frontend, stdout, "verify", "principal", "--rational-function", "1/(2*y^2) + 1/(2*(y-1)^2)", "--base", "1/3"
    )
    assert status == Exit_Status.OKAY
    assert result.inputs["base"] == "1/3"


def test_verify_fails_at_tiny_tolerance(frontend, stdout):
    status, result = run(frontend, stdout, "verify", "principal", "--inv-angles", "1/2,1/3,1/7", "--tol", "1e-30")
    assert status == Exit_Status.FAIL
    assert result.result["passed"] is False
    assert result.status == 1


def test_verify_needs_phi_for_pullback(frontend, stdout):
    status, _ = run(frontend, stdout, "verify", "pullback", "--inv-angles", "0,0,0")
    assert status == Exit_Status.USAGE


@pytest.mark.parametrize("flags", [
    ["--phi", "(y"],
    ["--phi", "()"],
    ["--rational-function", "[1]/[0,0]"],
])
def test_verify_malformed_expressions_are_usage_errors(frontend, stdout, flags):
    argv = ["verify", "pullback"] + flags
    if flags[0] == "--phi":
        argv += ["--inv-angles", "0,0,0"]
    else:
        argv += ["--phi", "y^2"]
    status, result = run(frontend, stdout, *argv)
    assert status == Exit_Status.USAGE
    assert result.result["error"] == "ParseError"


def test_verify_needs_exactly_one_equation(frontend, stdout):
    status, _ = run(frontend, stdout, "verify", "principal")
    assert status == Exit_Status.USAGE


def test_verify_numerics_error(frontend, stdout):
    status, result = run(frontend, stdout, "verify", "riccati", "--inv-angles", "0,0,0", "--order", "3")
    assert status == Exit_Status.FAIL
    assert result.result["error"] == "OrderTooSmallError"


def test_sweep_bound_too_small(frontend, stdout):
    status, _ = run(frontend, stdout, "sweep", "--max-den", "1")
    assert status == Exit_Status.USAGE


def test_sweep_writes_records(frontend, stdout, tmp_path):
    out = tmp_path / "results.json"
    status, result = run(frontend, stdout, "sweep", "--max-den", "3", "--out", str(out), "--workers", "1")
    assert status == Exit_Status.OKAY
    assert result.result == {"total": 10, "agree": 10, "disagree": 0, "inconclusive": 0}
    records = [json.loads(line) for line in out.read_text(encoding="utf-8").splitlines()]
    assert len(records) == 10
    assert all(record["agree"] for record in records)


def test_sweep_unwritable_output(frontend, stdout, tmp_path):
    status, _ = run(frontend, stdout, "sweep", "--max-den", "2", "--out", str(tmp_path / "missing" / "out.json"))
    assert status == Exit_Status.FAIL


def test_argparse_errors_are_usage(frontend, stdout):
    assert frontend.run(["classify-equation"]) == Exit_Status.USAGE
    assert frontend.run(["verify", "sideways", "--inv-angles", "0,0,0"]) == Exit_Status.USAGE
    assert frontend.run([]) == Exit_Status.USAGE


def test_output_is_deterministic(stdout):
    first, second = io.StringIO(), io.StringIO()
    Commands_Frontend(stdout=first).run(["classify-group", "--sig", "2,7,14"])
    Commands_Frontend(stdout=second).run(["classify-group", "--sig", "2,7,14"])
    strip = lambda text: {k: v for k, v in json.loads(text).items() if k != "elapsed_ms"}
    assert strip(first.getvalue()) == strip(second.getvalue())


def test_command_result_round_trip():
    result = Commands_Backend().classify_equation("1/2,1/3,1/4")
    assert CommandResult.model_validate_json(result.model_dump_json()) == result


def test_parse_rational_function():
    assert parse_rational_function("[1]/[0, 1]") == parse_rational_function("1/y")
    with pytest.raises(ParseError):
        parse_rational_function("[1]/[]")
