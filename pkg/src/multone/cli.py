"""Command-line front end.

Every command writes one JSON document (or CSV table) to stdout or --output.
Reals carry 15 significant digits and exact rationals print as "p/q", so a
fixed set of flags always yields the same bytes.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from . import __version__
from .bounds import MomentTable, MomentTableError, best_bound, moment_table_from_model, scenario
from .catalog import CatalogError, build_example, list_catalog
from .chebotarev import (
    DEFAULT_S_GRID,
    StreamError,
    chebotarev_weights,
    empirical_lower_density,
    exact_density,
    hecke_stream,
)
from .cyclotomic import CyclotomicNumber
from .surds import Surd

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

DEFAULTS = {
    "seed": 42,
    "count": 100_000,
    "s_grid": list(DEFAULT_S_GRID),
    "output": None,
    "format": "json",
    "threads": 1,
}


class UsageError(Exception):
    pass


def load_schema(name: str) -> dict:
    """Shipped JSON schema for a command's output ('bound', 'density', ...)."""
    from importlib.resources import files

    return json.loads((files("multone") / "schemas" / f"{name}.json").read_text())


# formatting -------------------------------------------------------------------


def real(x: float) -> float:
    """Round to 15 significant digits."""
    x = float(x)
    if not math.isfinite(x) or x == 0:
        return 0.0 if x == 0 else x
    return float(f"{x:.15g}")


def rat(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def cyclo_text(x: CyclotomicNumber) -> str:
    r = x.reduced()
    if r.is_rational():
        return rat(r.to_fraction())
    parts = []
    for e, c in r.coeffs.items():
        mono = "1" if e == 0 else (f"z{r.order}" if e == 1 else f"z{r.order}^{e}")
        parts.append(mono if c == 1 else f"{rat(c)}*{mono}")
    return " + ".join(parts)


def normalize(obj):
    """Recursively apply the output number conventions."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return real(obj)
    if isinstance(obj, Fraction):
        return rat(obj)
    if isinstance(obj, Surd):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): normalize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [normalize(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dump_json(doc) -> str:
    return json.dumps(normalize(doc), indent=2, ensure_ascii=False) + "\n"


def dump_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([real(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


# commands ---------------------------------------------------------------------


def _rep(entry, role):
    try:
        return entry.rep(role)
    except CatalogError as exc:
        raise UsageError(str(exc.args[0])) from None


def _entry(name):
    try:
        return build_example(name)
    except CatalogError as exc:
        raise UsageError(str(exc.args[0])) from None


def cmd_catalog(cfg):
    rows = list_catalog()
    if cfg["format"] == "csv":
        return dump_csv(
            ["name", "order", "projective_order", "distinguished_degrees"],
            [[r["name"], r["order"], "" if r["projective_order"] is None else r["projective_order"],
              ";".join(map(str, r["distinguished_degrees"]))] for r in rows],
        )
    return dump_json({"catalog": rows})


def cmd_group_table(cfg):
    e = _entry(cfg["name"])
    doc = e.table.to_json()
    doc["name"] = e.name
    doc["projective_order"] = e.projective_order
    doc["roles"] = {r: e.table.labels[i] for r, i in e.distinguished_reps.items()}
    if cfg["format"] == "csv":
        G = e.group
        header = ["label", "degree"] + [c.label for c in G.classes]
        rows = [[chi.label, d] + [cyclo_text(v) for v in chi.values] for chi, d in zip(e.table, e.table.degrees)]
        return dump_csv(header, [["size", ""] + [c.size for c in G.classes]] + rows)
    return dump_json(doc)


def _pair(cfg):
    e = _entry(cfg["name"])
    return e, _rep(e, cfg["role_a"]), _rep(e, cfg["role_b"])


def cmd_density(cfg):
    e, a, b = _pair(cfg)
    hs = hecke_stream(e.group, a, b, cfg["seed"], cfg["count"], cfg["threads"])
    report = empirical_lower_density(hs, cfg["s_grid"])
    if cfg["format"] == "csv":
        return dump_csv(["s", "ratio", "partial_sum", "count"],
                        [[x, report.empirical[x], ps, report.count] for x, ps in zip(report.s_grid, report.partial_sums)])
    doc = {"name": e.name, "roles": [cfg["role_a"], cfg["role_b"]], "seed": cfg["seed"]}
    doc.update(report.to_json())
    if a != b:
        bound = best_bound(moment_table_from_model(a, b))
        doc["best_bound"] = {"method": bound.chosen, "value": bound.value, "closed_form": bound.closed_form}
    else:
        doc["best_bound"] = None
    return dump_json(doc)


def cmd_moments(cfg):
    e, a, b = _pair(cfg)
    try:
        t = moment_table_from_model(a, b)
    except MomentTableError as exc:
        raise UsageError(str(exc)) from None
    exact = {k: getattr(t, k) for k in "ABCPD"}
    exact["Q"] = list(t.Q)
    if cfg["format"] == "csv":
        rows = [[k, _exact_text(exact[k]), float(Surd.of(exact[k]))] for k in "ABCPD"]
        rows += [[f"Q{i + 1}", _exact_text(q), float(Surd.of(q))] for i, q in enumerate(t.Q)]
        return dump_csv(["moment", "exact", "value"], rows)
    doc = {
        "name": e.name,
        "roles": [cfg["role_a"], cfg["role_b"]],
        "table": t.to_json(),
        "exact": {k: _exact_text(v) if k != "Q" else [_exact_text(q) for q in v] for k, v in exact.items()},
        "exact_density": rat(exact_density(a, b)),
    }
    return dump_json(doc)


def _exact_text(x) -> str:
    return str(x) if isinstance(x, Surd) else rat(x)


def cmd_bound(cfg):
    if bool(cfg.get("scenario")) == bool(cfg.get("table")):
        raise UsageError("give exactly one of --scenario or --table")
    doc: dict = {}
    if cfg.get("scenario"):
        try:
            sc = scenario(cfg["scenario"])
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
        doc["scenario"] = sc.name
        doc["description"] = sc.description
        doc["reference"] = {"constant": list(sc.reference), "value": float(sc.reference_value)}
        derivation = sc.derive()
        if derivation is None:
            doc.update({"method": None, "value": float(sc.reference_value), "closed_form": _ref_closed(sc), "trace": [], "best": None})
            return _bound_out(cfg, doc)
        table = sc.table
    else:
        try:
            table = MomentTable.load(cfg["table"])
        except OSError as exc:
            raise UsageError(f"cannot read table: {exc.strerror}") from None
        except MomentTableError as exc:
            raise UsageError(str(exc)) from None
        derivation = best_bound(table)
    try:
        best = best_bound(table)
    except MomentTableError as exc:
        raise UsageError(str(exc)) from None
    doc.update(derivation.to_json())
    doc["best"] = {"method": best.chosen, "value": best.value, "closed_form": best.closed_form}
    return _bound_out(cfg, doc)


def _ref_closed(sc) -> str:
    p, q, r, t = sc.reference
    return rat(Fraction(p, t)) if q == 0 else f"({Surd.of(p) + Surd.sqrt(r) * q})/{t}"


def _bound_out(cfg, doc):
    if cfg["format"] == "csv":
        rows = [[s["name"], s["output"], s["value"]] for s in doc.get("trace", [])]
        rows.append(["value", doc["closed_form"], doc["value"]])
        return dump_csv(["step", "output", "value"], rows)
    return dump_json(doc)


def cmd_stream(cfg):
    e = _entry(cfg["name"])
    chi = _rep(e, cfg["role_a"])
    hs = hecke_stream(e.group, chi, chi, cfg["seed"], cfg["count"], cfg["threads"])
    st = hs.stream
    counts = st.class_counts()
    G = e.group
    rows = []
    for c, w, k in zip(G.classes, chebotarev_weights(G), counts.tolist()):
        rows.append({
            "label": c.label,
            "weight": w,
            "observed": int(k),
            "frequency": k / st.count if st.count else 0.0,
            "a": cyclo_text(chi[c.index]),
        })
    deg = chi.degree
    tempered = all(abs(complex(v)) <= float(deg) + 1e-9 for v in chi.values)
    if cfg["format"] == "csv":
        return dump_csv(["label", "weight", "observed", "frequency", "a"],
                        [[r["label"], rat(r["weight"]), r["observed"], r["frequency"], r["a"]] for r in rows])
    head = [{"norm": smp.norm, "a": cyclo_text(smp.a)} for smp in hs.samples(10)]
    return dump_json({
        "name": e.name,
        "role": cfg["role_a"],
        "seed": cfg["seed"],
        "count": st.count,
        "classes": rows,
        "frequency_check_3sigma": st.frequency_check(),
        "tempered": tempered,
        "head": head,
    })


def cmd_verify(cfg):
    from .verify import mislabeled, run_verification

    overrides = {}
    if cfg.get("inject_fault") == "mislabel-A6":
        overrides["A6-3dim"] = mislabeled(build_example("A6-3dim"))
    report = run_verification(overrides)
    if cfg["format"] == "csv":
        out = dump_csv(["check", "status", "hard", "detail"],
                       [[c.name, c.status, c.hard, c.detail] for c in report.checks])
    else:
        out = dump_json(report.to_json())
    return out, (EXIT_OK if report.ok else EXIT_FAIL)


# argument handling --------------------------------------------------------------


def _s_grid(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("s-grid must be comma separated reals") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="stream seed (default 42)")
    common.add_argument("--count", type=int, default=argparse.SUPPRESS, help="number of places (default 100000)")
    common.add_argument("--s-grid", type=_s_grid, default=argparse.SUPPRESS, dest="s_grid",
                        help="comma separated, strictly decreasing s values > 1")
    common.add_argument("--output", "-o", default=argparse.SUPPRESS, help="write to this file instead of stdout")
    common.add_argument("--format", choices=("json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--config", default=argparse.SUPPRESS, help="JSON file of defaults; flags win")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS, help="worker threads for stream generation")

    p = argparse.ArgumentParser(prog="multone", description=__doc__.splitlines()[0], parents=[common])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    cat = sub.add_parser("catalog", parents=[common], help="catalog inspection")
    cat.add_argument("action", choices=("list",))

    grp = sub.add_parser("group", parents=[common], help="group data")
    grp.add_argument("action", choices=("table",))
    grp.add_argument("name")

    for cmd, hlp in (("density", "exact and empirical disagreement density"), ("moments", "exact moment table")):
        sp = sub.add_parser(cmd, parents=[common], help=hlp)
        sp.add_argument("name")
        sp.add_argument("role_a")
        sp.add_argument("role_b")

    bd = sub.add_parser("bound", parents=[common], help="density lower bound")
    g = bd.add_mutually_exclusive_group(required=True)
    g.add_argument("--scenario")
    g.add_argument("--table")

    stp = sub.add_parser("stream", parents=[common], help="place stream summary")
    stp.add_argument("name")
    stp.add_argument("role_a", metavar="role")

    ver = sub.add_parser("verify", parents=[common], help="run the identity and soundness suite")
    ver.add_argument("--inject-fault", choices=("mislabel-A6",), default=None, help=argparse.SUPPRESS)
    return p


def resolve_config(ns: argparse.Namespace) -> dict:
    cfg = dict(DEFAULTS)
    config = getattr(ns, "config", None)
    if config:
        try:
            with open(config) as fh:
                file_cfg = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config: {exc}") from None
        if not isinstance(file_cfg, dict):
            raise UsageError("config must be a JSON object")
        unknown = set(file_cfg) - set(DEFAULTS)
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
        cfg.update({k.replace("-", "_"): v for k, v in file_cfg.items()})
    cfg.update(vars(ns))
    if cfg["count"] < 0 or cfg["seed"] < 0:
        raise UsageError("seed and count must be nonnegative")
    if cfg["threads"] < 1:
        raise UsageError("threads must be positive")
    if cfg["format"] not in ("json", "csv"):
        raise UsageError("format must be json or csv")
    return cfg


COMMANDS = {
    "catalog": cmd_catalog,
    "group": cmd_group_table,
    "density": cmd_density,
    "moments": cmd_moments,
    "bound": cmd_bound,
    "stream": cmd_stream,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = resolve_config(ns)
        result = COMMANDS[ns.command](cfg)
    except (UsageError, StreamError) as exc:
        print(f"multone: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out, code = result if isinstance(result, tuple) else (result, EXIT_OK)
    if cfg["output"]:
        with open(cfg["output"], "w", newline="") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return code
