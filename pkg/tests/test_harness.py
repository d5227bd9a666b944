import json

import pytest

from cubeops.harness import EXTRA_SUITES, SUITES, SuiteConfig, replay, report_json, run_suite

SMALL = SuiteConfig(dim=1, seed=42, samples=20)


def test_suite_names():
    assert {"operad.laws", "comonad.axioms", "approximation.retract", "convolution.may"} <= set(SUITES)
    assert "comonad.broken" in EXTRA_SUITES and "comonad.broken" not in SUITES


@pytest.mark.parametrize("n", [1, 2])
def test_default_suites_pass(n):
    reports = run_suite(None, SuiteConfig(dim=n, samples=20))
    failed = [(r.suite, l.law) for r in reports for l in r.laws if not l.passed]
    assert failed == []


def test_reports_are_sorted_and_deterministic():
    names = ["operad.laws", "comonad.axioms"]
    a = report_json(run_suite(names, SMALL), SMALL)
    b = report_json(run_suite(list(reversed(names)), SMALL), SMALL)
    assert a == b
    suites = [s["suite"] for s in json.loads(a)["suites"]]
    assert suites == sorted(suites)


def test_timing_is_opt_in():
    r = run_suite(["operad.laws"], SMALL)
    assert "timing" not in json.dumps(json.loads(report_json(r, SMALL)))
    assert "timing" in report_json(r, SMALL, timing=True)


def test_broken_fixture_fails_and_replays():
    (report,) = run_suite(["comonad.broken"], SMALL)
    assert not report.passed
    (lw,) = report.laws
    payload = json.loads(json.dumps(lw.counterexample))
    assert replay("comonad.broken", lw.law, payload, SMALL) is False


def test_replay_of_passing_input():
    (report,) = run_suite(["operad.laws"], SMALL)
    assert report.passed
    with pytest.raises(KeyError):
        replay("operad.laws", "no-such-law", {"inputs": {"seq": []}}, SMALL)
