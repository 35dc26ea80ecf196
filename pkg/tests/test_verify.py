import pytest

from multone.catalog import build_example
from multone.verify import (
    FINDING,
    PASS,
    adjoint_expectation,
    gl2_summand_multiplicities,
    mislabeled,
    octahedral_checks,
    quadruple_identity_holds,
    run_verification,
    soundness_sweep,
    symmetric_split_holds,
    tetrahedral_checks,
)


@pytest.fixture(scope="module")
def report():
    return run_verification()


def test_fresh_build_passes(report):
    assert report.ok
    statuses = {c.name: c.status for c in report.checks}
    assert statuses["Ad irreducible: G216"] == PASS
    assert statuses["Ad reducible: dihedral-8"] == PASS
    assert all(s in (PASS, FINDING) for s in statuses.values())


def test_soft_checks_never_fail(report):
    for c in report.checks:
        if not c.hard:
            assert c.status in (PASS, FINDING)


def test_extraspecial_adjoint_is_a_finding(report):
    by = {c.name: c for c in report.checks}
    for name in ("extraspecial(3,1)", "extraspecial(5,1)"):
        c = by[f"Ad irreducible: {name}"]
        assert c.status == FINDING and not c.hard
        assert c.detail.startswith("Ad = ")
    assert adjoint_expectation("G72") == (True, True)


def test_report_lines(report):
    assert "Ad irreducible: G216 pass" in report.lines()
    doc = report.to_json()
    assert doc["ok"] and doc["summary"]["fail"] == 0


def test_mislabeled_entry_fails():
    bad = mislabeled(build_example("A6-3dim"))
    r = run_verification({"A6-3dim": bad})
    assert not r.ok
    assert [c.name for c in r.failures()] == ["Ad irreducible: A6-3dim"]


def test_individual_checks(tetra, octa):
    assert quadruple_identity_holds(tetra)
    assert symmetric_split_holds(octa)
    assert all(tetrahedral_checks(tetra).values())
    assert all(octahedral_checks(octa).values())
    assert gl2_summand_multiplicities(build_example("G216")) == []
    sweep = soundness_sweep(tetra)
    assert sweep.pairs == 7 * 6 and not sweep.violations and not sweep.floor_violations
