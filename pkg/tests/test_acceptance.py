"""Acceptance criteria, one test per criterion.

Each test runs the corresponding verification suite(s) at the stated
ranks, asserts exact success, enforces the stated runtime bound where one
exists, and prints a one-line pass/fail summary (visible with pytest -s).
"""

import time

from spinhecke.suites import run_suite

def _run(criterion: str, suites, limit: float | None = None) -> None:
    t0 = time.perf_counter()
    reports = [run_suite(name, n=n) for name, n in suites]
    elapsed = time.perf_counter() - t0
    ok = all(r["passed"] for r in reports)
    nchecks = sum(len(r["checks"]) for r in reports)
    verdict = "PASS" if ok and (limit is None or elapsed < limit) else "FAIL"
    bound = f", limit {limit:.0f}s" if limit else ""
    print(f"criterion {criterion}: {verdict} "
          f"({nchecks} checks in {elapsed:.1f}s{bound})")
    for r in reports:
        bad = [c for c in r["checks"] if c["status"] != "pass"]
        assert r["passed"], f"{r['suite']}: {bad[:5]}"
    if limit is not None:
        assert elapsed < limit, f"runtime {elapsed:.1f}s exceeds {limit}s"


def test_criterion_1_basis_dimensions_and_closure():
    _run("1 (bases and closure)", [("dims", None)], limit=120)


def test_criterion_2_finite_isomorphism_suite():
    _run("2 (finite Morita maps)", [("finite-iso", 2), ("finite-iso", 3)],
         limit=60)


def test_criterion_3_affine_isomorphism_suite():
    _run("3 (affine Morita maps)", [("affine-iso", 2)], limit=120)


def test_criterion_4_jucys_murphy():
    _run("4 (Jucys-Murphy elements)", [("jm", None)])


def test_criterion_5_basic_spin_supermodule():
    _run("5 (basic spin supermodule)", [("rep", 5)])


def test_criterion_6_center():
    _run("6 (center and odd center)", [("center", None)])


def test_criterion_7_intertwiners():
    _run("7 (intertwiners)", [("intertwine", 4)], limit=300)


def test_criterion_8_cyclotomic_correspondence():
    _run("8 (cyclotomic correspondence)", [("cyclotomic", None)])


def test_criterion_9_engine_soundness():
    _run("9 (engine soundness)", [("engine", None)])
