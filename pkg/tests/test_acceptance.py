"""Acceptance suite.

Each criterion runs over its full parameter grid at the stated tolerance --
which is exact rational equality everywhere (tolerance zero) -- and prints
one pass/fail line.  The lines are written through the unbuffered real
stdout so they stay visible under pytest's capture.
"""

import json
import subprocess
import sys
import time

from harmonic_kernels.verify import RunConfig, run_identities

CFG = RunConfig()  # acceptance grids are the defaults


def _check(capfd, criterion: str, reports, elapsed: float, budget: float | None):
    bad = [r for r in reports if r.status != "pass"]
    status = "PASS" if not bad and reports else "FAIL"
    extra = f" [{elapsed:.1f}s]" if budget is None else \
        f" [{elapsed:.1f}s / budget {budget:.0f}s]"
    with capfd.disabled():
        print(f"ACCEPTANCE {criterion}: {status} "
              f"({len(reports)} reports, exact equality){extra}", flush=True)
        for r in bad:
            print(f"    failing: {r.identity_id} {r.params} {r.status} "
                  f"{r.witness}", flush=True)
    assert reports, "criterion produced no reports"
    assert not bad
    if budget is not None:
        assert elapsed < budget, f"runtime {elapsed:.1f}s exceeds budget {budget}s"


def test_criterion_1_real_planewave_theorem(capfd):
    t0 = time.perf_counter()
    reports = run_identities(["planewave.real"], CFG)
    elapsed = time.perf_counter() - t0
    assert len(reports) == 15  # m in {3,4,5} x k in 0..4
    _check(capfd, "1 (real plane-wave theorem)", reports, elapsed, budget=60)


def test_criterion_2_complex_planewave_theorem(capfd):
    t0 = time.perf_counter()
    reports = run_identities(["planewave.complex"], CFG)
    elapsed = time.perf_counter() - t0
    assert len(reports) == 32  # n in {2,3} x p,q in 0..3
    assert all(any(n.startswith("constant:") for n in r.resolution_notes)
               for r in reports)
    _check(capfd, "2 (complex plane-wave theorem)", reports, elapsed, budget=180)


def test_criterion_3_symplectic_planewave_theorem(capfd):
    t0 = time.perf_counter()
    reports = run_identities(["planewave.symplectic"], CFG)
    elapsed = time.perf_counter() - t0
    assert len(reports) == 18  # n=1: p<=q, p+q<=5 (12); n=2: p<=q<=2 (6)
    assert all(any(n.startswith("constant:") for n in r.resolution_notes)
               for r in reports)
    _check(capfd, "3 (symplectic plane-wave theorem)", reports, elapsed, budget=300)


def test_criterion_4_reproducing_kernel_suites(capfd):
    t0 = time.perf_counter()
    reports = run_identities(["spherical.kernel_reproduction_K",
                              "complex.kernel_reproduction_K",
                              "symplectic.kernel_reproduction_KS",
                              "spherical.fischer_reproduction_Z",
                              "complex.fischer_reproduction_Z",
                              "symplectic.fischer_reproduction_ZS"], CFG)
    elapsed = time.perf_counter() - t0
    assert CFG.grid.repro_seeds >= 5  # >= 5 seeded random harmonics per point
    _check(capfd, "4 (reproducing-kernel suites)", reports, elapsed, budget=None)


def test_criterion_5_operator_identity_suites(capfd):
    idents = [
        "symplectic.sl2_commutators",
        "symplectic.kappa_relations",
        "spherical.fischer_duality",
        "spherical.proportionality",
        "complex.proportionality",
        "symplectic.laplacian_ladder",
        "spherical.projector_idempotent",
        "spherical.projector_annihilation",
        "complex.projector_annihilation",
        "symplectic.projector_idempotent",
        "symplectic.projector_annihilation",
    ]
    t0 = time.perf_counter()
    reports = run_identities(idents, CFG)
    elapsed = time.perf_counter() - t0
    # random-input identities draw op_seeds (>= 20) inputs per grid point;
    # deterministic grids (the Laplacian ladder) span >= 20 points
    assert CFG.grid.op_seeds >= 20
    assert sum(1 for r in reports
               if r.identity_id == "symplectic.laplacian_ladder") >= 20
    _check(capfd, "5 (operator-identity suites)", reports, elapsed, budget=None)


def test_criterion_6_dimension_oracles(capfd):
    t0 = time.perf_counter()
    reports = run_identities(["spherical.dim_formula_vs_nullspace",
                              "complex.dim_formula_vs_nullspace",
                              "symplectic.dim_formula_vs_nullspace",
                              "symplectic.dim_bookkeeping"], CFG)
    elapsed = time.perf_counter() - t0
    # full oracle grids: Delta on P_k (m<=5,k<=5), Delta_z (n<=3,p,q<=3),
    # joint kernel (2n<=4, p<=q<=3)
    assert sum(1 for r in reports
               if r.identity_id == "spherical.dim_formula_vs_nullspace") == 18
    assert sum(1 for r in reports
               if r.identity_id == "complex.dim_formula_vs_nullspace") == 32
    _check(capfd, "6 (dimension oracles)", reports, elapsed, budget=None)


def test_criterion_7_closed_form_vs_projection(capfd):
    t0 = time.perf_counter()
    reports = run_identities(["symplectic.ZS_via_projection",
                              "symplectic.KS_via_projection"], CFG)
    elapsed = time.perf_counter() - t0
    # both paths over every criterion-3 grid point
    assert len(reports) == 2 * 18
    _check(capfd, "7 (closed form vs projection path)", reports, elapsed,
           budget=None)


def test_criterion_8_determinism(capfd):
    cmd = [sys.executable, "-m", "harmonic_kernels.cli",
           "verify", "all", "--seed", "42", "--jobs", "2"]
    t0 = time.perf_counter()
    first = subprocess.run(cmd, capture_output=True, text=True)
    second = subprocess.run(cmd, capture_output=True, text=True)
    elapsed = time.perf_counter() - t0
    identical = first.stdout == second.stdout
    ok = identical and first.returncode == 0 and second.returncode == 0
    with capfd.disabled():
        print(f"ACCEPTANCE 8 (determinism, byte-identical verify-all twice): "
              f"{'PASS' if ok else 'FAIL'} "
              f"({len(first.stdout.splitlines())} report lines) [{elapsed:.1f}s]",
              flush=True)
    assert first.returncode == 0, first.stderr[-2000:]
    assert second.returncode == 0
    assert identical
    # sanity: the stream is valid JSON lines covering all suites
    lines = [json.loads(l) for l in first.stdout.splitlines()]
    suites = {l["identity_id"].split(".")[0] for l in lines}
    assert suites == {"spherical", "complex", "symplectic", "pizzetti", "planewave"}
