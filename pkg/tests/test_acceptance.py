"""Acceptance criteria 1-8.  Each test prints one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` or directly with python3.
"""
from __future__ import annotations

import io
import json
import math
import subprocess
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from contextlib import redirect_stdout

import pytest

from multone.catalog import ADJOINT_IRREDUCIBLE, ADJOINT_REDUCIBLE, CATALOG_NAMES, adjoint_is_irreducible, build_example
from multone.characters import (
    adjoint_character,
    adjoint_class_function,
    alt_power_class_function,
    inner_product,
    lemma_check_linear,
    self_twists,
    sym_power,
    sym_power_class_function,
)
from multone.chebotarev import empirical_lower_density, hecke_stream, pole_order_estimate
from multone.cli import main
from multone.verify import gl2_summand_multiplicities, soundness_sweep

TOL_CONST = 1e-12
TOL_REL = 0.15


ACCEPTANCE_LINES: dict[int, str] = {}


def report(n: int, ok: bool, detail: str = "") -> None:
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else "")
    ACCEPTANCE_LINES[n] = line
    print(line)


def _fresh_catalog():
    build_example.cache_clear()


# 1 ------------------------------------------------------------------------------

CONSTANTS = {
    "thm1a": 1 / 8,
    "thm1b": 1 / (3 + 2 * math.sqrt(2)),
    "thm2": 2 / 5,
    "gl3a-large": 1 / 28,
    "gl3a-chars": 1 / 18,
    "gl3b-mixed": 2 / (17 + 3 * math.sqrt(21)),
    "gl3c": 1 / 12,
    "gl3-both-polyhedral": 1 / 14,
}


def test_criterion_1_scenario_constants():
    t0 = time.perf_counter()
    errors = {}
    for name, expected in CONSTANTS.items():
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = main(["bound", "--scenario", name])
        doc = json.loads(buf.getvalue())
        errors[name] = abs(doc["value"] - expected) if code == 0 else math.inf
    elapsed = time.perf_counter() - t0
    worst = max(errors.values())
    ok = worst <= TOL_CONST and elapsed < 1.0
    report(1, ok, f"max error {worst:.2e}, {elapsed:.3f}s")
    assert worst <= TOL_CONST, errors
    assert elapsed < 1.0


# 2 ------------------------------------------------------------------------------


def test_criterion_2_identities():
    bad = []
    for name in CATALOG_NAMES:
        e = build_example(name)
        t = e.table
        if not t.orthogonality_holds():
            bad.append(f"{name}: orthogonality")
        for chi in t:
            sq = chi * chi.conj()
            ad = adjoint_class_function(chi)
            if inner_product(sq, sq) != inner_product(ad, ad) + 1:
                bad.append(f"{name} {chi.label}: quadruple")
            if sym_power_class_function(chi, 2) + alt_power_class_function(chi, 2) != chi * chi:
                bad.append(f"{name} {chi.label}: Sym2+Alt2")
    report(2, not bad, "; ".join(bad[:5]) or f"{len(CATALOG_NAMES)} groups")
    assert not bad


# 3 ------------------------------------------------------------------------------


def test_criterion_3_adjoint_irreducibility():
    _fresh_catalog()
    t0 = time.perf_counter()
    wrong = []
    for name in ADJOINT_IRREDUCIBLE:
        e = build_example(name)
        if not adjoint_is_irreducible(e):
            ad = adjoint_character(e.rep("rho"))
            wrong.append(f"{name} reducible: {ad!r}")
    for name in ADJOINT_REDUCIBLE:
        if adjoint_is_irreducible(build_example(name)):
            wrong.append(f"{name} irreducible")
    elapsed = time.perf_counter() - t0
    report(3, not wrong and elapsed < 30, "; ".join(wrong) + f"; {elapsed:.1f}s" if wrong else f"{elapsed:.1f}s")
    assert elapsed < 30
    assert not wrong


# 4 ------------------------------------------------------------------------------


def test_criterion_4_polyhedral_decompositions():
    tet = build_example("binary-tetrahedral")
    t = tet.table
    pi = tet.rep("pi")
    mu, mu2, ad = tet.role_index("mu"), tet.role_index("mu2"), tet.role_index("Ad")
    omega = alt_power_class_function(pi, 2)
    sym2 = sym_power_class_function(pi, 2)
    rhs = sym2 * omega + omega * omega * t[mu] + omega * omega * t[mu2]
    sym4 = sym_power(pi, 4)
    tet_ok = (
        sym4.class_function() == rhs
        and sym4.is_isobaric()
        and mu in self_twists(t[ad])
        and t[mu] * t[mu] == t[mu2]
        and t[mu2] * t[mu] == t[0]
    )
    adad = adjoint_character(t[ad]).coeffs == {mu: 1, mu2: 1, ad: 2}

    octa = build_example("binary-octahedral")
    o = octa.table
    opi = octa.rep("pi")
    eta = octa.role_index("eta")
    sigma = octa.role_index("sigma")
    ad_eta = o.find(adjoint_class_function(opi) * o[eta])
    quadratic = eta != 0 and o[eta] * o[eta] == o[0]
    oct_ok = quadratic and ad_eta is not None and o.degrees[sigma] == 2 and sym_power(opi, 4).coeffs == {sigma: 1, ad_eta: 1}

    ok = tet_ok and adad and oct_ok
    report(4, ok, f"tetrahedral Sym4 {tet_ok}, Ad(Ad) {adad}, octahedral Sym4 {oct_ok}")
    assert ok


# 5 ------------------------------------------------------------------------------


def test_criterion_5_soundness_sweep():
    _fresh_catalog()
    t0 = time.perf_counter()
    pairs, viol, floor = 0, [], []
    for name in CATALOG_NAMES:
        r = soundness_sweep(build_example(name))
        pairs += r.pairs
        viol += [(name,) + v for v in r.violations]
        floor += [(name,) + v for v in r.floor_violations]
    elapsed = time.perf_counter() - t0
    ok = not viol and not floor and elapsed < 60
    report(5, ok, f"{pairs} pairs, {len(viol)} bound violations, {len(floor)} floor violations, {elapsed:.1f}s")
    assert not viol and not floor
    assert elapsed < 60


# 6 ------------------------------------------------------------------------------


def test_criterion_6_summand_lemma():
    bad, soft = [], []
    for name in CATALOG_NAMES:
        e = build_example(name)
        bad += [f"{name} {chi.label}" for chi in e.table if not lemma_check_linear(chi)]
        soft += [f"{name}: {s} x{m} in Ad({r})" for r, s, m in gl2_summand_multiplicities(e)]
    detail = f"linear violations {len(bad)}; 2-dim sweep findings {len(soft)}"
    if soft:
        detail += " [" + "; ".join(soft[:3]) + "]"
    report(6, not bad, detail)
    assert not bad


# 7 ------------------------------------------------------------------------------

MONOMIALS = [(1, 1, 0, 0), (2, 2, 0, 0), (1, 0, 0, 1), (1, 1, 1, 1)]
PAIRS = [("G216", "rho", "rho-twist"), ("binary-tetrahedral", "pi", "pi-twist")]


def _moment(e, a, b, m):
    w, x, y, z = m
    v = inner_product(a**w * a.conj() ** x * b**y * b.conj() ** z, e.table[0])
    return complex(v).real


def test_criterion_7_analytic_consistency():
    t0 = time.perf_counter()
    misses, worst = [], 0.0
    for name, ra, rb in PAIRS:
        e = build_example(name)
        a, b = e.rep(ra), e.rep(rb)
        hs = hecke_stream(e.group, a, b, 42, 10**6)
        for m in MONOMIALS:
            exact = _moment(e, a, b, m)
            est = pole_order_estimate(hs, m).estimate
            # relative for nonzero targets, absolute 0.15 for a zero target
            err = abs(est - exact) / (abs(exact) if exact else 1.0)
            worst = max(worst, err)
            if err > TOL_REL:
                misses.append(f"{name} {m}: {est:.3f} vs {exact:g}")
        rep = empirical_lower_density(hs)
        dens = float(rep.exact_density)
        err = abs(rep.extrapolated - dens) / dens
        worst = max(worst, err)
        if err > TOL_REL:
            misses.append(f"{name} density: {rep.extrapolated:.3f} vs {dens:.3f}")
    elapsed = time.perf_counter() - t0
    ok = not misses and elapsed < 60
    report(7, ok, f"worst relative error {worst:.3f}, {elapsed:.1f}s" + (f"; {misses}" if misses else ""))
    assert not misses
    assert elapsed < 60


# 8 ------------------------------------------------------------------------------


def _cli(args):
    proc = subprocess.run([sys.executable, "-m", "multone", *args], capture_output=True)
    return proc.returncode, proc.stdout


def test_criterion_8_determinism(tmp_path):
    table = tmp_path / "table.json"
    table.write_text(json.dumps({"A": 1, "B": 1, "C": 1, "D": 2}))
    commands = [
        ["catalog", "list"],
        ["group", "table", "G216"],
        ["density", "binary-tetrahedral", "pi", "pi-twist", "--count", "300000"],
        ["density", "C2", "trivial", "sign", "--count", "300000", "--format", "csv"],
        ["moments", "G216", "rho", "rho-twist"],
        ["bound", "--scenario", "gl3b-mixed"],
        ["bound", "--table", str(table)],
        ["stream", "G216", "rho", "--count", "300000"],
        ["verify"],
    ]
    jobs = [cmd + ["--threads", str(n)] for cmd in commands for n in (1, 4, 1)]
    with ThreadPoolExecutor(4) as pool:
        results = list(pool.map(_cli, jobs))
    differing = []
    for i, cmd in enumerate(commands):
        runs = results[3 * i : 3 * i + 3]
        if len({out for _, out in runs}) != 1 or runs[0][0] != 0:
            differing.append(" ".join(cmd[:2]))
    report(8, not differing, f"{len(commands)} commands x 3 runs" + (f"; differing {differing}" if differing else ""))
    assert not differing


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
