"""Identity and soundness checks over the whole catalog.

Hard checks fail the run.  Soft checks report a "finding" instead: the
two-dimensional summand sweep, and adjoint irreducibility for extraspecial
entries, where it cannot hold (see ``adjoint_expectation``).
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Mapping

from .bounds import best_bound, moment_table_from_model, scenario, SCENARIO_NAMES
from .catalog import (
    ADJOINT_IRREDUCIBLE,
    ADJOINT_REDUCIBLE,
    CATALOG_NAMES,
    CatalogEntry,
    adjoint_is_irreducible,
    build_example,
)
from .characters import (
    adjoint_character,
    adjoint_class_function,
    alt_power_class_function,
    inner_product,
    is_monomial,
    lemma_check_linear,
    self_twists,
    sym_power,
    sym_power_class_function,
)
from .chebotarev import exact_density

PASS, FAIL, FINDING = "pass", "fail", "finding"


@dataclass
class Check:
    name: str
    status: str
    hard: bool = True
    detail: str = ""

    def to_json(self) -> dict:
        d = {"name": self.name, "status": self.status, "hard": self.hard}
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass
class VerifyReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks if c.hard)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.hard and c.status == FAIL]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [c.to_json() for c in self.checks],
            "summary": {
                s: sum(1 for c in self.checks if c.status == s) for s in (PASS, FAIL, FINDING)
            },
        }

    def lines(self) -> list[str]:
        return [f"{c.name} {c.status}" + (f" ({c.detail})" if c.detail else "") for c in self.checks]


def _outcome(ok: bool, hard: bool = True) -> str:
    if ok:
        return PASS
    return FAIL if hard else FINDING


# individual checks ------------------------------------------------------------


def quadruple_identity_holds(entry: CatalogEntry) -> bool:
    """<chi chibar, chi chibar> = <Ad, Ad> + 1 for every irreducible."""
    for chi in entry.table:
        sq = chi * chi.conj()
        ad = adjoint_class_function(chi)
        if inner_product(sq, sq) != inner_product(ad, ad) + 1:
            return False
    return True


def symmetric_split_holds(entry: CatalogEntry) -> bool:
    """Sym^2 + Alt^2 equals the tensor square for every irreducible."""
    return all(
        sym_power_class_function(chi, 2) + alt_power_class_function(chi, 2) == chi * chi
        for chi in entry.table
    )


def gl2_summand_multiplicities(entry: CatalogEntry) -> list[tuple[str, str, int]]:
    """(rho, sigma, multiplicity) for every 3-dim rho and 2-dim sigma with multiplicity > 1 in Ad(rho)."""
    t = entry.table
    out = []
    for i, d in enumerate(t.degrees):
        if d != 3:
            continue
        ad = adjoint_character(t[i])
        for j, dj in enumerate(t.degrees):
            if dj == 2 and ad.multiplicity(j) > 1:
                out.append((t.labels[i], t.labels[j], ad.multiplicity(j)))
    return out


@dataclass
class SweepResult:
    pairs: int
    violations: list[tuple[str, str]]
    floor_violations: list[tuple[str, str]]


def soundness_sweep(entry: CatalogEntry) -> SweepResult:
    """best_bound(model moments) <= exact density, and the 1/(2n^2) floor, over ordered distinct pairs."""
    t = entry.table
    viol, floor = [], []
    pairs = 0
    for i, chi in enumerate(t):
        for j, psi in enumerate(t):
            if i == j:
                continue
            pairs += 1
            dens = exact_density(chi, psi)
            if not best_bound(moment_table_from_model(chi, psi)).at_most(dens):
                viol.append((t.labels[i], t.labels[j]))
            if t.degrees[i] == t.degrees[j]:
                n = t.degrees[i]
                if dens < Fraction(1, 2 * n * n):
                    floor.append((t.labels[i], t.labels[j]))
    return SweepResult(pairs, viol, floor)


def adjoint_expectation(name: str) -> tuple[bool, bool]:
    """(expected irreducible, hard check).

    Extraspecial groups are p-groups, so every irreducible has p-power degree
    and p^(2k) - 1 is never one; Ad there is a sum of linear characters.
    """
    if name.startswith("extraspecial"):
        return True, False
    return name in ADJOINT_IRREDUCIBLE, True


def tetrahedral_checks(entry: CatalogEntry) -> dict[str, bool]:
    t = entry.table
    pi = entry.rep("pi")
    mu, mu2 = entry.role_index("mu"), entry.role_index("mu2")
    ad = entry.role_index("Ad")
    omega = alt_power_class_function(pi, 2)
    sym2 = sym_power_class_function(pi, 2)
    # Sym^4 = (Sym^2 (x) omega) + omega^2 mu + omega^2 mu^2
    expected = sym2 * omega + omega * omega * t[mu] + omega * omega * t[mu2]
    sym4 = sym_power(pi, 4)
    adad = adjoint_character(t[ad])
    return {
        "Sym4 decomposition: binary-tetrahedral": sym4.class_function() == expected and sym4.is_isobaric(),
        "mu self-twist of Ad: binary-tetrahedral": mu in self_twists(t[ad]) and mu2 in self_twists(t[ad]),
        "Ad(Ad pi) = mu + mu2 + 2 Ad: binary-tetrahedral": adad.coeffs == {mu: 1, mu2: 1, ad: 2},
    }


def octahedral_checks(entry: CatalogEntry) -> dict[str, bool]:
    t = entry.table
    pi = entry.rep("pi")
    eta = entry.role_index("eta")
    sigma = entry.role_index("sigma")
    ad = adjoint_class_function(pi)
    ad_eta = t.find(ad * t[eta])
    sym4 = sym_power(pi, 4)
    sigma_ok = t.degrees[sigma] == 2 and is_monomial(t[sigma], entry.monomial_candidates(2))
    quadratic = t[eta] * t[eta] == t[0] and eta != 0
    return {
        "Sym4 decomposition: binary-octahedral": ad_eta is not None and sym4.coeffs == {sigma: 1, ad_eta: 1},
        "sigma dihedral, eta quadratic: binary-octahedral": sigma_ok and quadratic,
    }


# driver ---------------------------------------------------------------------


def run_verification(entries: Mapping[str, CatalogEntry] | None = None, log: Callable[[str], None] | None = None) -> VerifyReport:
    """Run every check; ``entries`` overrides catalog entries by name."""
    overrides = dict(entries or {})

    def get(name: str) -> CatalogEntry:
        return overrides.get(name) or build_example(name)

    report = VerifyReport()

    def add(name, ok, hard=True, detail=""):
        report.checks.append(Check(name, _outcome(ok, hard), hard, detail))
        if log:
            log(f"{name} {report.checks[-1].status}")

    names = sorted(set(CATALOG_NAMES) | set(overrides))
    for name in names:
        e = get(name)
        add(f"orthogonality: {name}", e.table.orthogonality_holds())
        add(f"quadruple identity: {name}", quadruple_identity_holds(e))
        add(f"Sym2 + Alt2 = square: {name}", symmetric_split_holds(e))
        add(f"linear-summand lemma: {name}", all(lemma_check_linear(chi) for chi in e.table))
        bad = gl2_summand_multiplicities(e)
        add(f"GL(2)-summand sweep: {name}", not bad, hard=False,
            detail=", ".join(f"{s} occurs {m}x in Ad({r})" for r, s, m in bad))

    for name in ADJOINT_IRREDUCIBLE:
        e = get(name)
        expected, hard = adjoint_expectation(name)
        ok = adjoint_is_irreducible(e) == expected
        detail = "" if ok else _adjoint_detail(e)
        add(f"Ad irreducible: {name}", ok, hard, detail)
    for name in ADJOINT_REDUCIBLE:
        e = get(name)
        add(f"Ad reducible: {name}", not adjoint_is_irreducible(e) and is_monomial(e.rep("pi"), e.monomial_candidates(2)))

    for check, ok in tetrahedral_checks(get("binary-tetrahedral")).items():
        add(check, ok)
    for check, ok in octahedral_checks(get("binary-octahedral")).items():
        add(check, ok)

    for name in names:
        r = soundness_sweep(get(name))
        add(f"soundness: {name}", not r.violations, detail=f"{r.pairs} pairs" if not r.violations else f"violations {r.violations[:3]}")
        add(f"Ramakrishnan floor: {name}", not r.floor_violations, detail="" if not r.floor_violations else f"{r.floor_violations[:3]}")

    for sname in SCENARIO_NAMES[:-1]:
        sc = scenario(sname)
        add(f"scenario constant: {sname}", sc.derive().exact_equals(sc.reference_value))
    return report


def _adjoint_detail(e: CatalogEntry) -> str:
    role = next(r for r in ("pi", "rho", "Pi") if r in e.distinguished_reps)
    ad = adjoint_character(e.rep(role))
    return "Ad = " + " + ".join(f"{n}*{lab}" if n != 1 else lab for lab, n in ad.summands())


def mislabeled(entry: CatalogEntry, role: str = "rho") -> CatalogEntry:
    """Copy of ``entry`` whose ``role`` points at an irreducible of another degree."""
    t = entry.table
    cur = entry.role_index(role)
    alt = next((i for i, d in enumerate(t.degrees) if i != cur and d != t.degrees[cur] and d > 1), 0)
    reps = dict(entry.distinguished_reps)
    reps[role] = alt
    return replace(entry, distinguished_reps=reps, notes=entry.notes + " [mislabeled]")
