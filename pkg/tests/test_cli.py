import json

import pytest

from dd3lax.cli import main
from dd3lax.double import AlgebraElement, TensorElement, casimir, universal_R
from dd3lax.lax import r_matrix_2
from dd3lax.matrices import AlgebraValuedMatrix, ScalarMatrix


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_emit_r21_json_round_trip(capsys):
    code, out, _ = run(capsys, "emit", "--object", "R21")
    assert code == 0
    assert ScalarMatrix.from_json(json.loads(out)) == r_matrix_2()


def test_emit_substitution(capsys):
    code, out, _ = run(capsys, "emit", "--object", "R3p", "--subst", "x=1")
    assert code == 0
    assert ScalarMatrix.from_json(json.loads(out)) == ScalarMatrix.swap(3)


def test_emit_algebra_objects(capsys):
    _, out, _ = run(capsys, "emit", "--object", "c1")
    assert AlgebraElement.from_json(json.loads(out)) == casimir(1)
    _, out, _ = run(capsys, "emit", "--object", "UR")
    assert TensorElement.from_json(json.loads(out)) == universal_R()
    _, out, _ = run(capsys, "emit", "--object", "L2")
    assert AlgebraValuedMatrix.from_json(json.loads(out)).rows == 2


def test_emit_rep_and_latex(capsys):
    code, out, _ = run(capsys, "emit", "--object", "rep:3+")
    data = json.loads(out)
    assert code == 0 and data["dim"] == 3 and len(data["images"]) == 36
    code, out, _ = run(capsys, "emit", "--object", "derivedL:L3:2e", "--format", "latex")
    assert code == 0 and out.startswith(r"\begin{pmatrix}")


def test_emit_unknown_object(capsys):
    code, _, err = run(capsys, "emit", "--object", "R99")
    assert code == 2 and "unknown object" in err


def test_eval_equal(capsys):
    code, out, _ = run(capsys, "eval", "--relation", "ybe-parametric:R21", "--subst", "x=2", "y=1/3")
    assert code == 0 and out.strip().endswith("equal")


def test_eval_json(capsys):
    code, out, _ = run(capsys, "eval", "--relation", "rll:L2:3-", "--subst", "x=3", "y=7", "--json")
    assert code == 0 and json.loads(out)["equal"] is True


@pytest.mark.parametrize(
    "argv",
    [
        ("eval", "--relation", "ybe-parametric:R21", "--subst", "x=2"),
        ("eval", "--relation", "ybe-parametric:R21", "--subst", "x=2", "y=0"),
        ("eval", "--relation", "nope", "--subst", "x=2", "y=3"),
        ("eval", "--relation", "ybe-parametric:R21", "--subst", "x=two", "y=3"),
    ],
)
def test_eval_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_verify_bad_suite(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "bogus"])
    assert exc.value.code == 2


def test_verify_single_suite_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "casimirs", "--json")
    reports = json.loads(out)
    assert code == 0
    assert [r["status"] for r in reports] == ["pass"] * 3
    assert all(set(r) >= {"relation", "status", "witness"} for r in reports)


def test_verify_order_independent_of_jobs(capsys):
    _, one, _ = run(capsys, "verify", "--suite", "reps", "--json", "--jobs", "1")
    _, two, _ = run(capsys, "verify", "--suite", "reps", "--json", "--jobs", "2")
    assert one == two


def test_jobs_from_environment(monkeypatch):
    from dd3lax.verify import default_jobs

    monkeypatch.setenv("DD3LAX_JOBS", "3")
    assert default_jobs() == 3


def test_failure_report_carries_witness(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lax-golden", "--json")
    reports = json.loads(out)
    failed = [r for r in reports if r["status"] == "fail"]
    assert code == 1
    assert {r["relation"] for r in failed} == {"lax-golden:L3:21", "lax-golden:L3:22"}
    assert all(r["witness"]["row"] == 0 and r["witness"]["col"] == 1 for r in failed)
