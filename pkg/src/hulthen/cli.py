"""
Command-line interface.

    hulthen energy --state 2p --delta 0.05 --method nu --c0 0
    hulthen wavefunction --state 3p --delta 0.025
    hulthen table --out tables.csv
    hulthen compare --state 2p 3d --delta 0.025 0.1
    hulthen verify [--quick]

Exit codes: 0 success, 1 numerical check failure, 2 usage error.
Settings resolve as command-line flags, then ``--config`` (JSON), then
atomic-unit defaults. HULTHEN_ATOMIC_UNITS=0 turns the defaults for mu and
hbar off, so both must then be given.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import reports, verification
from .errors import HulthenError
from .model import C0_IMPROVED, PotentialSpec, QuantumNumbers
from .nu_solver import energy_nu, wavefunction

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

DEFAULTS = {
    "z": 1.0,
    "mu": 1.0,
    "hbar": 1.0,
    "c0": [C0_IMPROVED],
    "method": ["nu", "susy"],
    "format": "csv",
    "grid_points": 8000,
    "rmax_factor": None,
    "out": None,
    "state": None,
    "delta": None,
}


class UsageError(Exception):
    pass


def parse_c0(text) -> float:
    if isinstance(text, (int, float)):
        value = float(text)
    else:
        try:
            value = float(Fraction(str(text).strip()))
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"cannot parse --c0 value {text!r}; use 0, 1/12 or a number") from None
    if value < 0:
        raise UsageError(f"--c0 must be >= 0, got {text!r}")
    return value


def _split(values):
    out = []
    for v in values or []:
        out.extend(p for p in str(v).split(",") if p.strip())
    return out


def _common(parser: argparse.ArgumentParser):
    g = parser.add_argument_group("physics")
    g.add_argument("--state", nargs="+", action="extend", metavar="LABEL",
                   help="states as labels (2p) or n_r,l pairs (0,1)")
    g.add_argument("--delta", nargs="+", action="extend", type=float, metavar="F")
    g.add_argument("--z", type=float)
    g.add_argument("--mu", type=float)
    g.add_argument("--hbar", type=float)
    g.add_argument("--c0", nargs="+", action="extend", metavar="C0", help="0, 1/12 or a number")
    g = parser.add_argument_group("output")
    g.add_argument("--format", choices=("csv", "json", "pretty"))
    g.add_argument("--out", type=Path)
    g = parser.add_argument_group("numerics")
    g.add_argument("--grid-points", type=int, dest="grid_points")
    g.add_argument("--rmax-factor", type=float, dest="rmax_factor",
                   help="box size in units of 1/delta")
    parser.add_argument("--config", type=Path, help="JSON file with default settings")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hulthen",
        description="Bound states of the Hulthen potential: closed forms and a numerical oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("energy", help="energies of selected states")
    _common(p)
    p.add_argument("--method", nargs="+", action="extend",
                   help="nu, susy, numeric-exact, numeric-approx (comma or space separated)")

    p = sub.add_parser("wavefunction", help="normalized chi(r) and R(r) on a grid")
    _common(p)
    p.add_argument("--r-points", type=int, default=200, dest="r_points")

    p = sub.add_parser("table", help="regenerate the reference tables with discrepancies")
    _common(p)
    p.add_argument("--which", choices=("1", "2", "all"), default="all")
    p.add_argument("--quick", action="store_true", help="restrict to 2p and 3p")

    p = sub.add_parser("compare", help="all four methods side by side")
    _common(p)

    p = sub.add_parser("verify", help="run the invariant sweep; JSON report")
    _common(p)
    p.add_argument("--quick", action="store_true", help="2p and 3p only")
    p.add_argument("--inject-fault", choices=("riccati",), dest="inject_fault",
                   help="perturb B in the Riccati check (self-test of the checker)")
    return parser


def resolve(args) -> dict:
    cfg = dict(DEFAULTS)
    if args.command == "verify":
        cfg["format"] = "json"
    loaded = {}
    if getattr(args, "config", None):
        try:
            loaded = json.loads(args.config.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from None
        if not isinstance(loaded, dict):
            raise UsageError(f"config {args.config} must hold a JSON object")
    if os.environ.get("HULTHEN_ATOMIC_UNITS", "1") == "0":
        cfg["mu"] = cfg["hbar"] = None
    for key, value in loaded.items():
        key = key.replace("-", "_")
        if key not in cfg:
            raise UsageError(f"unknown config key {key!r}")
        if key in ("c0", "method", "state", "delta") and not isinstance(value, list):
            value = [value]
        cfg[key] = Path(value) if key == "out" else value
    for key in ("z", "mu", "hbar", "format", "grid_points", "rmax_factor", "out"):
        value = getattr(args, key, None)
        if value is not None:
            cfg[key] = value
    for key in ("state", "delta", "c0"):
        value = getattr(args, key, None)
        if value is not None:
            cfg[key] = value
    if getattr(args, "method", None):
        cfg["method"] = args.method
    if cfg["mu"] is None or cfg["hbar"] is None:
        raise UsageError("HULTHEN_ATOMIC_UNITS=0: --mu and --hbar are required")

    cfg["c0"] = [parse_c0(c) for c in cfg["c0"]]
    cfg["method"] = _split(cfg["method"])
    for m in cfg["method"]:
        if m not in reports.METHODS:
            raise UsageError(f"unknown method {m!r}; choose from {', '.join(reports.METHODS)}")
    if cfg["state"] is not None:
        try:
            cfg["state"] = [QuantumNumbers.parse(s) for s in cfg["state"] if str(s).strip()]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if cfg["delta"] is not None:
        cfg["delta"] = [float(d) for d in cfg["delta"]]
        if any(d <= 0 for d in cfg["delta"]):
            raise UsageError("--delta must be positive")
    if cfg["grid_points"] < 500:
        raise UsageError("--grid-points must be >= 500")
    try:
        cfg["base"] = PotentialSpec(delta=1.0, Z=cfg["z"], mu=cfg["mu"], hbar=cfg["hbar"])
    except HulthenError as exc:
        raise UsageError(str(exc)) from None
    return cfg


def _json_value(value):
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(reports.fmt(value))
    if isinstance(value, dict):
        return {k: _json_value(v) for k, v in sorted(value.items())}
    if isinstance(value, (list, tuple)):
        return [_json_value(v) for v in value]
    return value


def render_csv(rows, fields) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        writer.writerow([reports.fmt(row.get(f)) for f in fields])
    return buf.getvalue()


def render_pretty(rows, fields) -> str:
    table = [list(fields)] + [[reports.fmt(row.get(f)) for f in fields] for row in rows]
    widths = [max(len(r[i]) for r in table) for i in range(len(fields))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in table]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def render(rows, fields, fmt, extra_json_fields=()) -> str:
    if fmt == "json":
        keep = tuple(fields) + tuple(extra_json_fields)
        data = [{k: _json_value(r.get(k)) for k in keep} for r in rows]
        return json.dumps(data, indent=2) + "\n"
    if fmt == "pretty":
        return render_pretty(rows, fields)
    return render_csv(rows, fields)


def emit(text: str, out: Path | None):
    if out is None:
        sys.stdout.write(text)
        return
    try:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text)
    except OSError as exc:
        raise HulthenError(f"cannot write {out}: {exc}") from None


def _require(cfg, key, what):
    if not cfg[key]:
        raise UsageError(f"{what} required (--{key})")
    return cfg[key]


def run_energy(cfg) -> int:
    states = _require(cfg, "state", "at least one state")
    deltas = _require(cfg, "delta", "at least one delta")
    rows = reports.energy_rows(
        cfg["base"], states, deltas, cfg["c0"], cfg["method"],
        n_points=cfg["grid_points"], rmax_factor=cfg["rmax_factor"] or 50.0,
    )
    emit(render(rows, reports.ENERGY_FIELDS, cfg["format"], ("intermediates",)), cfg["out"])
    return EXIT_OK


def run_wavefunction(cfg, r_points: int) -> int:
    states = _require(cfg, "state", "a state")
    deltas = _require(cfg, "delta", "a delta")
    if len(states) != 1 or len(deltas) != 1 or len(cfg["c0"]) != 1:
        raise UsageError("wavefunction takes exactly one state, one delta and one c0")
    if r_points < 2:
        raise UsageError("--r-points must be >= 2")
    base = cfg["base"]
    spec = PotentialSpec(delta=deltas[0], Z=base.Z, mu=base.mu, hbar=base.hbar, c0=cfg["c0"][0])
    w = wavefunction(spec, states[0])
    # default range: 40 decay lengths of the exp(-delta sqrt(c) r) tail
    r_max = cfg["rmax_factor"] / spec.delta if cfg["rmax_factor"] else 40.0 / (spec.delta * w.sqrt_c)
    r = np.linspace(0.0, r_max, r_points + 1)[1:]
    chi = w.chi(r)
    rows = [{"r": float(a), "chi": float(b), "R": float(b / a)} for a, b in zip(r, chi)]
    header = {
        "state": states[0].label,
        "delta": spec.delta,
        "c0": spec.c0,
        "energy": energy_nu(spec, states[0]).energy,
        "sqrt_c": w.sqrt_c,
        "K": w.K,
        "degree": w.degree,
        "norm_const": w.norm_const,
    }
    if cfg["format"] == "json":
        doc = {"wavefunction": _json_value(header), "samples": [_json_value(x) for x in rows]}
        emit(json.dumps(doc, indent=2) + "\n", cfg["out"])
    else:
        meta = "".join(f"# {k}={reports.fmt(v)}\n" for k, v in header.items())
        emit(meta + render(rows, ("r", "chi", "R"), cfg["format"]), cfg["out"])
    return EXIT_OK


def run_table(cfg, which: str, quick: bool) -> int:
    states = cfg["state"]
    names = None if states is None else {q.label for q in states}
    if quick:
        names = {"2p", "3p"} if names is None else names & {"2p", "3p"}
    sections = []
    t1 = reports.table_one(names) if which in ("1", "all") else None
    if t1 is not None:
        sections.append(("table1", t1, reports.TABLE_I_FIELDS))
    if which in ("2", "all"):
        t2 = reports.table_two(names, n_points=cfg["grid_points"], rmax_factor=cfg["rmax_factor"] or 50.0)
        sections.append(("table2", t2, reports.TABLE_II_FIELDS))
    if t1 is not None:
        sections.append(("discrepancies", reports.discrepancies(t1), reports.TABLE_I_FIELDS))

    if cfg["format"] == "json":
        doc = {name: [{k: _json_value(r.get(k)) for k in fields} for r in rows] for name, rows, fields in sections}
        text = json.dumps(doc, indent=2) + "\n"
    else:
        parts = []
        for name, rows, fields in sections:
            body = render(rows, fields, cfg["format"])
            parts.append(body if len(sections) == 1 else f"# {name}\n{body}")
        text = "\n".join(parts)
    emit(text, cfg["out"])
    return EXIT_OK


def run_compare(cfg) -> int:
    states = _require(cfg, "state", "at least one state")
    deltas = _require(cfg, "delta", "at least one delta")
    rows = reports.compare_rows(
        cfg["base"], states, deltas, cfg["c0"],
        n_points=cfg["grid_points"], rmax_factor=cfg["rmax_factor"] or 50.0,
    )
    fields = tuple(rows[0]) if rows else ("state",)
    emit(render(rows, fields, cfg["format"]), cfg["out"])
    return EXIT_OK


def run_verify(cfg, quick: bool, fault: str | None) -> int:
    states = cfg["state"]
    if quick:
        states = [QuantumNumbers.parse(s) for s in verification.QUICK_STATES]
    deltas = cfg["delta"] or verification.DEFAULT_DELTAS
    c0s = cfg["c0"] if cfg["c0"] != DEFAULTS["c0"] else (0.0, C0_IMPROVED)
    results = verification.run_checks(states, deltas, c0s, base=cfg["base"], fault=fault)
    report = verification.summarize(results)
    if cfg["format"] == "json":
        text = json.dumps(_json_value(report), indent=2) + "\n"
    else:
        fields = ("check", "state", "delta", "c0", "value", "tolerance", "passed")
        text = render(report["checks"], fields, cfg["format"])
    emit(text, cfg["out"])
    if not report["ok"]:
        for f in report["failures"]:
            print(
                f"FAIL {f['check']} state={f['state']} delta={f['delta']} c0={reports.fmt(f['c0'])} "
                f"value={f['value']:.3e} tol={f['tolerance']:.1e}",
                file=sys.stderr,
            )
        return EXIT_FAIL
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = resolve(args)
        if args.command == "energy":
            return run_energy(cfg)
        if args.command == "wavefunction":
            return run_wavefunction(cfg, args.r_points)
        if args.command == "table":
            return run_table(cfg, args.which, args.quick)
        if args.command == "compare":
            return run_compare(cfg)
        if args.command == "verify":
            return run_verify(cfg, args.quick, args.inject_fault)
    except UsageError as exc:
        print(f"hulthen {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HulthenError as exc:
        print(f"hulthen {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
