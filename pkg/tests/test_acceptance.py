"""Acceptance criteria: one printed PASS/FAIL line per criterion.

Sample counts and time limits are the pinned values: 200 samples per law
unless stated, 500 for property (D) and for psi o alpha, 100 for the reduced
operad and the May action, 10 s per operad dimension and for the comonad
axioms, 60 s for the full default suite.
"""

import json
import subprocess
import sys
import time

import pytest

from cubeops.harness import SuiteConfig, replay, run_suite


@pytest.fixture
def report_line(capsys):
    def emit(name, ok, detail):
        line = f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}"
        with capsys.disabled():
            print("\n" + line)

    return emit


def run(names, n, samples=200, seed=42):
    start = time.perf_counter()
    reports = run_suite(names, SuiteConfig(dim=n, seed=seed, samples=samples))
    elapsed = time.perf_counter() - start
    laws = {(r.suite, l.law): l for r in reports for l in r.laws}
    return laws, elapsed


def failures(laws):
    return [f"{s}/{name}" for (s, name), l in laws.items() if not l.passed]


def at_least(laws, prefix, count):
    """Every law whose name starts with ``prefix`` checked at least ``count`` inputs."""
    hits = [l for (_, name), l in laws.items() if name.startswith(prefix)]
    return bool(hits) and all(l.checked >= count for l in hits)


def test_operad_laws(report_line):
    details, ok = [], True
    for n in (1, 2, 3):
        laws, dt = run(["operad.laws"], n)
        names = {name for _, name in laws}
        good = (
            not failures(laws)
            and dt < 10
            and names >= {"associativity", "unit", "equivariance", "simplicial"}
            and all(l.checked >= 200 for l in laws.values())
        )
        ok &= good
        details.append(f"n={n} {dt:.2f}s")
    report_line("operad laws (n=1,2,3; 200 samples; <10 s each)", ok, ", ".join(details))
    assert ok


def test_comonad_axioms(report_line):
    laws, dt = run(["comonad.axioms"], 1)
    kinds = {name.split("[")[1].rstrip("]") for _, name in laws if name.startswith("coassociativity[")}
    ok = (
        not failures(laws)
        and dt < 10
        and kinds >= {"Trivial", "Peaked", "Precomposed", "PostMapped", "Threshold", "Expanded", "Custom"}
        and at_least(laws, "coassociativity[", 200)
        and at_least(laws, "counit[", 200)
    )
    report_line("comonad axioms (200 per constructor; <10 s)", ok, f"{len(kinds)} constructors, {dt:.2f}s")
    assert ok


def test_property_d(report_line):
    laws, _ = run(["comonad.property_d"], 1)
    laws2, _ = run(["comonad.property_d"], 2)
    shipped = not failures(laws) and not failures(laws2) and at_least(laws, "pairs[", 500)
    config = SuiteConfig(dim=1, samples=200)
    (broken,) = run_suite(["comonad.broken"], config)
    law = broken.laws[0]
    payload = json.loads(json.dumps(law.counterexample)) if law.counterexample else None
    replays = payload is not None and replay("comonad.broken", law.law, payload, config) is False
    ok = shipped and not broken.passed and replays
    report_line(
        "property (D) (500 pairs per constructor; broken fixture replayable)",
        ok,
        f"shipped pass={shipped}, broken fails={not broken.passed}, replay re-fails={replays}",
    )
    assert ok


def test_coalgebra_equivalence(report_line):
    laws, _ = run(["coalgebra.equivalence"], 1)
    names = {name for _, name in laws}
    ok = (
        not failures(laws)
        and at_least(laws, "coend_round_trip", 200)
        and at_least(laws, "comonadic_round_trip", 200)
        and any("S^1]" in n for n in names)
        and any("3pt" in n for n in names)
    )
    report_line("coalgebra definition equivalence (200 samples)", ok, f"{len(laws)} round-trip laws")
    assert ok


def test_suspension_coalgebra(report_line):
    ok = True
    for n in (1, 2):
        laws, _ = run(["coalgebra.suspension"], n)
        ok &= (
            not failures(laws)
            and at_least(laws, "operad_morphism", 200)
            and at_least(laws, "equivariance", 200)
            and at_least(laws, "naturality", 200)
        )
    report_line("suspension coalgebra residuals zero (200 samples, n=1,2)", ok, "operad morphism, equivariance, naturality")
    assert ok


def test_approximation_retract(report_line):
    laws, dt = run(["approximation.retract"], 1)
    laws2, dt2 = run(["approximation.retract"], 2)
    ok = (
        not failures(laws)
        and not failures(laws2)
        and at_least(laws, "psi_alpha", 500)
        and at_least(laws, "H0[", 200)
        and at_least(laws, "H1[", 200)
        and at_least(laws, "H_property_d[", 100)
    )
    report_line(
        "approximation retract (psi o alpha 500; H endpoints 200 per constructor; H property (D) at 10 times)",
        ok,
        f"{len(laws)} laws n=1 in {dt:.2f}s, {len(laws2)} laws n=2 in {dt2:.2f}s",
    )
    assert ok


def test_comonad_morphism(report_line):
    laws, _ = run(["approximation.morphism"], 1)
    laws2, _ = run(["approximation.morphism"], 2)
    ok = not failures(laws) and not failures(laws2) and at_least(laws, "comonad_morphism", 200)
    report_line("morphism of comonads identities (200 tuples)", ok, "counit and comultiplication, n=1,2")
    assert ok


def test_cubical_supports(report_line):
    laws, _ = run(["approximation.support"], 1)
    ok = (
        not failures(laws)
        and at_least(laws, "peaked_singleton", 200)
        and at_least(laws, "suspension_singleton", 200)
        and at_least(laws, "threshold_support", 20)
        and at_least(laws, "threshold_oracle", 1)
        and at_least(laws, "oracle_contains", 1)
    )
    report_line("cubical supports (exact rules, oracle within one grid cell at budget 10^4)", ok, f"{len(laws)} laws")
    assert ok


def test_reduced_operad(report_line):
    laws, _ = run(["comonad.reduced"], 1)
    ok = not failures(laws) and at_least(laws, "one_point.rejects", 100)
    report_line("reduced operad triviality (100 candidates)", ok, "OnePoint rejects every non-base candidate")
    assert ok


def test_recognition(report_line):
    laws, _ = run(["recognition.retract", "recognition.structure", "recognition.membership"], 1)
    names = {name for _, name in laws}
    ok = (
        not failures(laws)
        and at_least(laws, "retract[", 200)
        and at_least(laws, "induced[", 200)
        and at_least(laws, "coalgebra_axioms[", 200)
        and "pn_membership" in names
        and {"retract[S^1]", "retract[S^1{3pt}]"} <= names
    )
    report_line("recognition (sphere and 3-point suspension, 200 points each)", ok, f"{len(laws)} laws")
    assert ok


def test_may_action(report_line):
    laws, _ = run(["convolution.may"], 1, samples=100)
    ok = not failures(laws) and at_least(laws, "concatenation", 100) and at_least(laws, "algebra_laws", 100)
    report_line("May action equals concatenation; algebra laws (100 samples)", ok, f"{len(laws)} laws")
    assert ok


def test_determinism_and_budget(report_line):
    cmd = [sys.executable, "-m", "cubeops.cli", "check", "--n", "1", "--seed", "42", "--samples", "100"]
    start = time.perf_counter()
    a = subprocess.run(cmd, capture_output=True, check=False)
    elapsed = time.perf_counter() - start
    b = subprocess.run(cmd, capture_output=True, check=False)
    identical = a.stdout == b.stdout and len(a.stdout) > 0
    ok = identical and a.returncode == 0 and elapsed < 60
    report_line(
        "determinism: byte-identical check reports; full default suite < 60 s",
        ok,
        f"identical={identical}, exit={a.returncode}, {elapsed:.2f}s",
    )
    assert ok
