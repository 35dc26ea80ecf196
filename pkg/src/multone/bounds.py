"""Lower bounds on disagreement density from moment tables.

Two pipelines turn the pole orders of fourth-degree Dirichlet series into a
density bound:

* ``eq4``: Cauchy-Schwarz splits sum |a-a'|^2 into a density factor and the
  fourth moment of the difference; the fourth moment is then bounded by
  (sqrt A + sqrt B + 2 sqrt C)^2.
* ``cseq``: the same split, but the fourth moment of the difference is
  expanded into its sixteen terms and each group is bounded separately,
  E = A + B + 4C + 2P + 2(Q1 + Q2 + Q3 + Q4).

Both give delta >= D^2 / budget.  Budgets are exact surds, so bounds compare
exactly against rational densities.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .surds import Surd, closed_constant, quotient_string

EQ4 = "cauchy_schwarz_eq4"
CSEQ = "fourth_moment_cseq"
BEST = "best"
RECONSTRUCTED = "reconstructed accounting"


class MomentTableError(ValueError):
    pass


def _num(x, name: str):
    if isinstance(x, Surd):
        if x.sign() < 0:
            raise MomentTableError(f"{name} must be nonnegative")
        return x
    if isinstance(x, bool) or x is None:
        raise MomentTableError(f"{name} must be a number")
    try:
        q = Fraction(repr(x)) if isinstance(x, float) else Fraction(x)
    except (TypeError, ValueError):
        raise MomentTableError(f"{name} must be a number") from None
    if q < 0:
        raise MomentTableError(f"{name} must be nonnegative")
    return q


def _json_num(x):
    if isinstance(x, Surd):
        return float(x)
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return float(x)


@dataclass(frozen=True)
class MomentTable:
    """Pole orders of the fourth-degree series.  P and Q default to Cauchy-Schwarz ceilings."""

    A: Fraction
    B: Fraction
    C: Fraction
    D: Fraction
    P: Fraction | Surd | None = None
    Q: tuple | None = None
    defaulted: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        for name in "ABCD":
            object.__setattr__(self, name, _num(getattr(self, name), name))
        defaulted = []
        if self.P is None:
            object.__setattr__(self, "P", self.C)
            defaulted.append("P")
        else:
            object.__setattr__(self, "P", _num(self.P, "P"))
        if self.Q is None:
            sac, sbc = Surd.sqrt(self.A * self.C), Surd.sqrt(self.B * self.C)
            object.__setattr__(self, "Q", (sac, sac, sbc, sbc))
            defaulted.append("Q")
        else:
            q = tuple(self.Q)
            if len(q) != 4:
                raise MomentTableError("Q must have four entries")
            object.__setattr__(self, "Q", tuple(_num(x, f"Q{i + 1}") for i, x in enumerate(q)))
        object.__setattr__(self, "defaulted", tuple(defaulted))
        if self.C * self.C > self.A * self.B:
            raise MomentTableError("inconsistent moment table: C exceeds sqrt(A*B)")
        if Surd.of(self.P) > Surd.of(self.C):
            raise MomentTableError("inconsistent moment table: P exceeds C")

    @classmethod
    def from_dict(cls, doc: dict) -> "MomentTable":
        if not isinstance(doc, dict):
            raise MomentTableError("moment table must be a JSON object")
        missing = [k for k in "ABCD" if k not in doc]
        if missing:
            raise MomentTableError(f"moment table missing {', '.join(missing)}")
        extra = set(doc) - set("ABCDPQ")
        if extra:
            raise MomentTableError(f"unknown moment table keys: {', '.join(sorted(extra))}")
        return cls(doc["A"], doc["B"], doc["C"], doc["D"], doc.get("P"), doc.get("Q"))

    @classmethod
    def load(cls, path) -> "MomentTable":
        try:
            with open(path) as fh:
                doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise MomentTableError(f"malformed moment table: {exc}") from None
        return cls.from_dict(doc)

    def to_json(self) -> dict:
        return {
            "A": _json_num(self.A),
            "B": _json_num(self.B),
            "C": _json_num(self.C),
            "P": _json_num(self.P),
            "Q": [_json_num(q) for q in self.Q],
            "D": _json_num(self.D),
        }

    def save(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=2)
            fh.write("\n")


@dataclass
class Step:
    name: str
    inputs: dict
    output: str
    value: float
    note: str = ""

    def to_json(self) -> dict:
        d = {"name": self.name, "inputs": self.inputs, "output": self.output, "value": self.value}
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class BoundDerivation:
    method: str
    numerator: Fraction
    budget: Surd
    table: MomentTable
    trace: list[Step]
    alternatives: list["BoundDerivation"] = field(default_factory=list)
    chosen: str | None = None

    @property
    def value(self) -> float:
        if self.numerator == 0:
            return 0.0
        return float(self.numerator) / float(self.budget)

    @property
    def closed_form(self) -> str:
        if self.numerator == 0:
            return "0"
        return quotient_string(self.numerator, self.budget)

    def at_most(self, q) -> bool:
        """Exact test value <= q for rational q."""
        q = Fraction(q)
        if self.numerator == 0:
            return q >= 0
        return Surd.of(self.numerator) <= self.budget * q

    def exact_equals(self, constant: Surd) -> bool:
        if self.numerator == 0:
            return constant.sign() == 0
        return self.budget * constant == Surd.of(self.numerator)

    def replay(self) -> float:
        """Recompute the value from the recorded trace alone."""
        steps = {s.name: s for s in self.trace}
        d = steps["pole order of |a-a'|^2"].value
        budget = steps["fourth moment budget"].value
        return 0.0 if d == 0 else d * d / budget

    def to_json(self) -> dict:
        doc = {
            "method": self.method,
            "value": self.value,
            "closed_form": self.closed_form,
            "table": self.table.to_json(),
            "trace": [s.to_json() for s in self.trace],
        }
        if self.chosen:
            doc["chosen_method"] = self.chosen
        if self.alternatives:
            doc["alternatives"] = [a.to_json() for a in self.alternatives]
        return doc


def _fmt(x) -> str:
    return str(x) if isinstance(x, Surd) else str(Surd.of(x))


def _difference_step(t: MomentTable) -> Step:
    return Step(
        "pole order of |a-a'|^2",
        {"D": _json_num(t.D)},
        _fmt(t.D),
        float(t.D),
        "sum |a_v - a'_v|^2 Nv^-s = D l(s) + O(1)",
    )


def _split_step(t: MomentTable) -> Step:
    return Step(
        "Cauchy-Schwarz split",
        {"D": _json_num(t.D)},
        "D^2 <= delta * M4",
        float(t.D) ** 2,
        "(sum_S |a-a'|^2 Nv^-s)^2 <= (sum_S Nv^-s)(sum |a-a'|^4 Nv^-s)",
    )


def bound_eq4(t: MomentTable) -> BoundDerivation:
    """delta >= D^2 / (sqrt A + sqrt B + 2 sqrt C)^2."""
    if t.D > 0 and t.A == 0 and t.B == 0 and t.C == 0:
        raise MomentTableError("inconsistent moment table")
    root = Surd.sqrt(t.A) + Surd.sqrt(t.B) + Surd.sqrt(t.C) * 2
    budget = root * root
    trace = [
        _difference_step(t),
        _split_step(t),
        Step(
            "cross-term identity",
            {"A": _json_num(t.A), "B": _json_num(t.B), "C": _json_num(t.C)},
            f"sqrt(M4) <= {root}",
            float(root),
            "conj(a)^2 b^2 + a^2 conj(b)^2 <= 2|a|^2|b|^2, then Minkowski on |a|^2, |a'|^2, 2|a||a'|",
        ),
        Step("fourth moment budget", {"sqrt_budget": float(root)}, str(budget), float(budget)),
    ]
    return BoundDerivation(EQ4, t.D * t.D, budget, t, trace)


def bound_cseq(t: MomentTable, reconstructed: bool = True) -> BoundDerivation:
    """delta >= D^2 / (A + B + 4C + 2P + 2 sum Q)."""
    qsum = sum((Surd.of(q) for q in t.Q), Surd())
    budget = Surd.of(t.A) + t.B + Surd.of(t.C) * 4 + Surd.of(t.P) * 2 + qsum * 2
    if t.D > 0 and budget.sign() == 0:
        raise MomentTableError("inconsistent moment table")
    label = f" ({RECONSTRUCTED})" if reconstructed else ""
    terms = [
        Step("|a|^4 terms", {"A": _json_num(t.A)}, _fmt(t.A), float(t.A)),
        Step("|a'|^4 terms", {"B": _json_num(t.B)}, _fmt(t.B), float(t.B)),
        Step("|a|^2|a'|^2 terms", {"C": _json_num(t.C)}, _fmt(Surd.of(t.C) * 4), 4 * float(t.C), "four copies: 2 direct, 2 from Re(a conj(a'))^2"),
        Step(
            "self-dual term",
            {"P": _json_num(t.P)},
            _fmt(Surd.of(t.P) * 2),
            2 * float(t.P),
            "2 Re(a^2 conj(a')^2)" + ("; P defaulted to C" if "P" in t.defaulted else ""),
        ),
        Step(
            "cubic terms",
            {"Q": [_json_num(q) for q in t.Q]},
            _fmt(qsum * 2),
            2 * float(qsum),
            "4 Re(|a|^2 a conj(a')) + 4 Re(|a'|^2 a conj(a')) bounded termwise"
            + ("; Q defaulted to sqrt(A*C), sqrt(B*C)" if "Q" in t.defaulted else ""),
        ),
    ]
    trace = [_difference_step(t), _split_step(t)] + terms
    trace.append(
        Step(
            "fourth moment budget",
            {"grouping": "A + B + 4C + 2P + 2(Q1+Q2+Q3+Q4)"},
            str(budget),
            float(budget),
            ("triangle-inequality grouping of the sixteen expansion terms" + label).strip(),
        )
    )
    return BoundDerivation(CSEQ, t.D * t.D, budget, t, trace)


def best_bound(t: MomentTable) -> BoundDerivation:
    """The stronger of the two pipelines; ties go to eq4."""
    e = bound_eq4(t)
    c = bound_cseq(t)
    if t.D == 0:
        win = e
    else:
        win = c if c.budget < e.budget else e
    return BoundDerivation(BEST, win.numerator, win.budget, t, list(win.trace), [e, c], win.method)


# model ----------------------------------------------------------------------


def moment_table_from_model(chi, chi_prime) -> MomentTable:
    """Exact pole orders for a pair of characters of one finite group."""
    from .characters import inner_product

    if chi.group is not chi_prime.group:
        raise MomentTableError("mismatched groups")
    if chi == chi_prime:
        raise MomentTableError("zero difference")
    a, b = chi, chi_prime
    aa, bb = a * a.conj(), b * b.conj()

    def ip(f, g) -> Fraction:
        v = inner_product(f, g)
        return v.to_fraction() if v.is_rational() else None

    def mag(f, g):
        v = inner_product(f, g)
        if v.is_rational():
            return abs(v.to_fraction())
        return Surd.sqrt(v.abs2().to_fraction())

    A = ip(aa, aa)
    B = ip(bb, bb)
    C = ip(aa, bb)
    D = ip(a - b, a - b)
    P = mag(a * a, b * b)
    Q = (mag(aa * a, b), mag(aa * b, a), mag(bb * a, b), mag(bb * b, a))
    return MomentTable(A, B, C, D, P, Q)


# scenarios ------------------------------------------------------------------


@dataclass(frozen=True)
class Scenario:
    name: str
    table: MomentTable | None
    method: str | None
    reference: tuple[int, int, int, int]
    description: str
    reconstructed: bool = False

    @property
    def reference_value(self) -> Surd:
        return closed_constant(*self.reference)

    def derive(self) -> BoundDerivation | None:
        if self.table is None:
            return None
        if self.method == CSEQ:
            return bound_cseq(self.table)
        d = bound_eq4(self.table)
        if self.reconstructed:
            d.trace.append(
                Step(
                    "mixed moment",
                    {"C": _json_num(self.table.C)},
                    _fmt(self.table.C),
                    float(self.table.C),
                    f"C = min(A, B) from shared cuspidal constituents ({RECONSTRUCTED})",
                )
            )
        return d


_SCENARIOS = {
    "thm1a": (dict(A=2, B=2, C=2, D=2), EQ4, (1, 0, 1, 8), "both adjoint lifts cuspidal", False),
    "thm1b": (dict(A=2, B=2, C=1, D=2), EQ4, (3, -2, 2, 1), "adjoint lifts cuspidal and distinct", False),
    "thm2": (dict(A=2, B=2, C=1, P=1, Q=[0, 0, 0, 0], D=2), CSEQ, (2, 0, 1, 5), "distinct adjoints, self-dual twist", False),
    "gl3a-large": (dict(A=7, B=7, C=7, D=2), EQ4, (1, 0, 1, 28), "GL(3) isobaric with a large summand", False),
    "gl3a-chars": (dict(A=9, B=9, C=9, P=9, Q=[0, 0, 0, 0], D=2), CSEQ, (1, 0, 1, 18), "GL(3) isobaric sum of eight Hecke characters", False),
    "gl3b-mixed": (dict(A=3, B=7, C=3, D=2), EQ4, (17, -3, 21, 50), "one polyhedral, one isobaric GL(3) object", True),
    "gl3c": (dict(A=3, B=3, C=3, D=2), EQ4, (1, 0, 1, 12), "GL(3) objects not of solvable polyhedral type", False),
    "gl3-both-polyhedral": (dict(A=7, B=7, C=7, P=7, Q=[0, 0, 0, 0], D=2), CSEQ, (1, 0, 1, 14), "both GL(3) objects of solvable polyhedral type", False),
}

SCENARIO_NAMES = tuple(_SCENARIOS) + ("ramakrishnan(n)",)


def scenario(name: str) -> Scenario:
    m = re.fullmatch(r"ramakrishnan\((\d+)\)", name)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise KeyError(f"unknown scenario {name!r}")
        return Scenario(name, None, None, (1, 0, 1, 2 * n * n), f"conjectured floor 1/(2n^2) for n = {n}; no derivation")
    try:
        doc, method, ref, desc, recon = _SCENARIOS[name]
    except KeyError:
        raise KeyError(f"unknown scenario {name!r}") from None
    return Scenario(name, MomentTable.from_dict(doc), method, ref, desc, recon)


def ramakrishnan_floor(n: int) -> Fraction:
    return Fraction(1, 2 * n * n)
