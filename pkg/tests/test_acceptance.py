"""Acceptance criteria, one test each, exact equality throughout.

Each test records a PASS/FAIL line that is printed in the terminal summary.
"""
import subprocess
import sys
import time

from dd3lax import lax, verify
from dd3lax.double import BASIS
from dd3lax.group import conjugacy_classes
from dd3lax.reps import ALL_LABELS, check_homomorphism, irrep


def _suite(name):
    reports = []
    for i in range(len(verify.TASKS[name])):
        reports.extend(verify.run_task(name, i))
    return reports


def _failures(reports):
    return [r.summary() for r in reports if not r.passed and not r.informational]


def _timed(fn):
    start = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - start


def test_01_hopf_axioms(criterion):
    with criterion("1  Hopf axioms over all basis elements and pairs"):
        reports, elapsed = _timed(lambda: _suite("hopf"))
        assert not _failures(reports), _failures(reports)
        assert elapsed < 5


def test_02_quasitriangular(criterion):
    with criterion("2  quasi-triangularity relations"):
        reports, elapsed = _timed(lambda: _suite("quasitriangular"))
        assert not _failures(reports), _failures(reports)
        assert any("intertwines" in r.relation for r in reports)
        assert elapsed < 10


def test_03_constant_ybe(criterion):
    with criterion("3  constant Yang-Baxter equation in the triple tensor power"):
        reports, elapsed = _timed(lambda: _suite("ybe-constant"))
        assert [r.status for r in reports] == ["pass"]
        assert elapsed < 30


def test_04_representations(criterion):
    with criterion("4  all eight irreps are homomorphisms with single-class dual support"):
        start = time.perf_counter()
        classes = conjugacy_classes()
        for label in ALL_LABELS:
            rep = irrep(label)
            report = check_homomorphism(rep)
            assert report.passed and report.pairs_checked == len(BASIS) ** 2, label
            assert rep.support() in classes, label
        assert sum(label.dim ** 2 for label in ALL_LABELS) == len(BASIS)
        assert time.perf_counter() - start < 10


def test_05_casimirs(criterion):
    with criterion("5  c1, c2 central and c2 - c1 is the reflection class sum"):
        reports = _suite("casimirs")
        assert len(reports) == 3
        assert not _failures(reports), _failures(reports)


def test_06_parametric_ybe(criterion):
    with criterion("6  spectral Yang-Baxter equation for both R-matrices"):
        start = time.perf_counter()
        for build in (lax.r_matrix_2, lax.r_matrix_3):
            assert lax.check_parametric_ybe(build()).passed
        assert time.perf_counter() - start < 60


def test_07_universal_lax(criterion):
    with criterion("7  universal Lax relation and c1/c2 adjudication"):
        start = time.perf_counter()
        assert lax.check_universal_lax(lax.r_matrix_2(), lax.universal_lax_2()).passed
        assert lax.check_universal_lax(lax.r_matrix_3(), lax.universal_lax_3(2, "matrix")).passed
        outcomes = {}
        for source in ("summation", "matrix"):
            for which in (1, 2):
                report = lax.check_universal_lax(lax.r_matrix_3(), lax.universal_lax_3(which, source))
                assert report.passed or report.witness is not None
                outcomes[source, which] = report.status
        assert outcomes == {
            ("summation", 1): "fail",
            ("summation", 2): "pass",
            ("matrix", 1): "fail",
            ("matrix", 2): "pass",
        }
        assert time.perf_counter() - start < 60


def test_08_golden_tables(criterion):
    with criterion("8  derived L tables equal every printed matrix"):
        mismatched = [
            f"{name}:{code}"
            for name, code, expected in lax.golden_L_tables()
            if lax.derived_L(name, code) != expected
        ]
        assert not mismatched, f"printed tables not reproduced: {mismatched}"


def test_09_limits(criterion):
    with criterion("9  zero-parameter limits equal (pi x id)R"):
        assert lax.limit_at_zero(lax.universal_lax_2()) == lax.constant_lax("21")
        assert lax.limit_at_zero(lax.universal_lax_3()) == lax.constant_lax("3+")


def test_10_rll(criterion):
    with criterion("10 RLL relation for every irrep against both Lax operators"):
        start = time.perf_counter()
        for name, (_, build_r, _) in lax.LAX_OPERATORS.items():
            R = build_r()
            for label in ALL_LABELS:
                assert lax.check_rll(R, lax.derived_L(name, label), label.dim).passed, (name, label)
        assert time.perf_counter() - start < 60


def test_11_regularity(criterion):
    from dd3lax.matrices import ScalarMatrix
    from dd3lax.scalars import OMEGA, LaurentPoly

    with criterion("11 regularity at x = 1"):
        assert lax.r_matrix_2().evaluate(x=1) == ScalarMatrix.swap(2).scale(LaurentPoly.const(OMEGA - 1))
        assert lax.r_matrix_3().evaluate(x=1) == ScalarMatrix.swap(3)


def test_12_negative_controls(criterion):
    with criterion("12 corrupted inputs are rejected with a witness"):
        hom = check_homomorphism(verify.corrupted_three_plus())
        assert not hom.passed and hom.failures
        ybe = lax.check_parametric_ybe(verify.corrupted_r21())
        assert not ybe.passed and ybe.witness is not None
        swapped = lax.check_universal_lax(lax.r_matrix_3(), lax.universal_lax_3(1, "matrix"))
        assert not swapped.passed and swapped.witness is not None
        rll = lax.check_rll(lax.r_matrix_2(), verify.twisted_identity_lax(), 2)
        assert not rll.passed and rll.witness is not None


def test_13_end_to_end(criterion):
    with criterion("13 verify --suite all exits 0 within five minutes"):
        start = time.perf_counter()
        proc = subprocess.run(
            [sys.executable, "-m", "dd3lax.cli", "verify", "--suite", "all"],
            capture_output=True, text=True, timeout=300,
        )
        elapsed = time.perf_counter() - start
        assert elapsed < 300
        failing = [line for line in proc.stdout.splitlines() if line.startswith("FAIL")]
        assert proc.returncode == 0, f"exit {proc.returncode}; failing: {failing}"
