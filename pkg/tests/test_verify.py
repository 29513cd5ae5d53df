from qubit_bundle import verify


def test_all_checks_pass_quickly():
    results = verify.run_all(seed=13, n=50)
    assert len(results) == len(verify.CHECKS)
    for result in results:
        assert result.passed, f"{result.name}: {result.max_error} >= {result.threshold}"


def test_results_deterministic_for_seed():
    a = verify.run_all(seed=21, n=30)
    b = verify.run_all(seed=21, n=30)
    assert [(r.name, r.max_error) for r in a] == [(r.name, r.max_error) for r in b]


def test_different_seeds_draw_different_trials():
    a = verify.run_all(seed=1, n=30)
    b = verify.run_all(seed=2, n=30)
    assert [r.max_error for r in a] != [r.max_error for r in b]


def test_report_formatting():
    results = verify.run_all(seed=5, n=10)
    report = verify.format_report(results, seed=5, n=10)
    lines = report.splitlines()
    assert len(lines) == len(results) + 1
    for line, result in zip(lines, results):
        assert line.startswith("PASS")
        assert result.name in line
        assert f"trials={result.trials}" in line.replace(" ", "")
    assert lines[-1].endswith("(seed=5, n=10)")


def test_failure_detected_in_report():
    bad = verify.CheckResult(name="broken", trials=3, max_error=1.0, threshold=0.5, passed=False)
    report = verify.format_report([bad], seed=0, n=3)
    assert report.splitlines()[0].startswith("FAIL")
    assert "0/1 properties passed" in report
