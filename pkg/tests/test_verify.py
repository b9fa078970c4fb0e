import json

from harmonic_kernels.verify import (
    GridConfig,
    IDENTITIES,
    RunConfig,
    enumerate_tasks,
    run_suites,
    run_task,
)

TINY = RunConfig(grid=GridConfig(real_m=(3,), real_kmax=1, complex_n=(2,),
                                 complex_degmax=1, symp_n=(1,), symp1_summax=2,
                                 symp2_degmax=1, lemma_kmax=1, lemma_degmax=1,
                                 repro_seeds=1, op_seeds=2))


def test_every_identity_reports_its_registry_id():
    seen = set()
    for ident, params in enumerate_tasks(("all",), TINY):
        if ident in seen:
            continue
        seen.add(ident)
        report = run_task(ident, params, TINY)
        assert report.identity_id == ident
        assert report.status == "pass", (ident, params, report.witness)
        json.loads(report.to_json_line())
    assert seen == set(IDENTITIES)


def test_reports_sorted_and_deterministic():
    a = run_suites(("spherical",), TINY)
    b = run_suites(("spherical",), TINY)
    assert [r.to_json_line() for r in a] == [r.to_json_line() for r in b]
    keys = [(r.identity_id, json.dumps(r.params, sort_keys=True)) for r in a]
    assert keys == sorted(keys)


def test_case_filter():
    reports = run_suites(("planewave",), TINY, case="real")
    assert reports and all(r.params["case"] == "real" for r in reports)


def test_seed_changes_reports_not_status():
    cfg2 = RunConfig(seed=7, grid=TINY.grid)
    a = run_suites(("planewave",), TINY, case="symplectic")
    b = run_suites(("planewave",), cfg2, case="symplectic")
    assert all(r.status == "pass" for r in a + b)
    assert [r.seed for r in a] != [r.seed for r in b]
