"""Command-line front end.

Problem files are JSON documents::

    {"problem_kind": "p1", "tumor": {"alpha": 0.05, "beta": 0.005},
     "oar": {"alpha": 0.04, "beta": 0.02}, "delta": 0.3,
     "d_min": 1.0, "d_max": 6.0, "gamma": 0.78}

Exit codes: 0 solved, 1 invalid input, 2 infeasible, 3 verification failed.
"""

from __future__ import annotations

import argparse
import csv
import enum
import io
import json
import math
import sys
from dataclasses import dataclass, fields, replace
from typing import Any

import numpy as np

from fraxion.equivalence import EquivalenceQuery, convert_bed, min_total_dose
from fraxion.errors import FraxionError, Infeasible, InfeasibleN, TooLarge, ValidationError
from fraxion.oracle import OracleConfig, OracleProblem, check_against_oracle, grid_best_fixed_n, verify
from fraxion.p1 import SolutionReport, is_active, solve_p1, solve_p1_fixed
from fraxion.p2 import solve_p2, solve_p2_fixed
from fraxion.radiobiology import (
    DoseBounds,
    ProblemParams,
    Protocol,
    Radiosensitivity,
    Thresholds,
    ceil_tol,
    floor_tol,
    oar_effect,
    omega_sign,
    p1_thresholds,
    p2_thresholds,
    tumor_effect,
    tumor_thresholds,
)

EXIT_OK, EXIT_INVALID, EXIT_INFEASIBLE, EXIT_VERIFY = 0, 1, 2, 3
KINDS = ("p1", "p2", "p3", "bed")

# which optional fields each kind requires / accepts
_REQUIRED = {
    "p1": {"tumor", "oar", "delta", "d_min", "d_max", "gamma"},
    "p2": {"tumor", "oar", "delta", "d_min", "d_max", "gamma"},
    "p3": {"tumor", "d_min", "d_max", "gamma"},
    "bed": {"tumor", "n", "d", "n_target"},
}
_OPTIONAL = {
    "p1": {"n_fixed"},
    "p2": {"n_fixed"},
    "p3": set(),
    "bed": {"d_min", "d_max"},
}
_FLOAT_FIELDS = ("delta", "d_min", "d_max", "gamma", "d")
_INT_FIELDS = ("n", "n_target", "n_fixed")

SWEEP_PARAMS = ("gamma", "delta", "alpha_t", "beta_t", "alpha_0", "beta_0", "d_min", "d_max")


class FixedNCase(str, enum.Enum):
    FIXED_N = "FixedN"


@dataclass(frozen=True)
class ProblemFile:
    problem_kind: str
    tumor: Radiosensitivity
    oar: Radiosensitivity | None = None
    delta: float | None = None
    d_min: float | None = None
    d_max: float | None = None
    gamma: float | None = None
    n: int | None = None
    d: float | None = None
    n_target: int | None = None
    n_fixed: int | None = None

    @classmethod
    def from_dict(cls, raw: Any) -> ProblemFile:
        if not isinstance(raw, dict):
            raise ValidationError("problem file must hold a JSON object")
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(raw) - known)
        if unknown:
            raise ValidationError(f"unknown field(s): {', '.join(unknown)}")
        kind = raw.get("problem_kind")
        if kind not in KINDS:
            raise ValidationError(f"problem_kind must be one of {KINDS}, got {kind!r}")
        present = {k for k, v in raw.items() if v is not None} - {"problem_kind"}
        missing = sorted(_REQUIRED[kind] - present)
        if missing:
            raise ValidationError(f"{kind} problem needs field(s): {', '.join(missing)}")
        extra = sorted(present - _REQUIRED[kind] - _OPTIONAL[kind])
        if extra:
            raise ValidationError(f"field(s) not allowed for {kind}: {', '.join(extra)}")
        values: dict[str, Any] = {"problem_kind": kind}
        for name in ("tumor", "oar"):
            if name in present:
                values[name] = _sens(name, raw[name])
        for name in _FLOAT_FIELDS:
            if name in present:
                values[name] = _number(name, raw[name])
        for name in _INT_FIELDS:
            if name in present:
                values[name] = _integer(name, raw[name])
        pf = cls(**values)
        pf.validate()
        return pf

    def validate(self) -> None:
        """Build the domain objects once so their invariants are enforced."""
        if self.problem_kind in ("p1", "p2"):
            self.params()
        elif self.problem_kind == "p3":
            self.query()
        else:
            if (self.d_min is None) != (self.d_max is None):
                raise ValidationError("bed bounds need both d_min and d_max")
            self.bounds()
            if self.d <= 0 or self.n < 1 or self.n_target < 1:
                raise ValidationError("bed needs n >= 1, d > 0 and n_target >= 1")

    def bounds(self) -> DoseBounds | None:
        if self.d_min is None:
            return None
        return DoseBounds(self.d_min, self.d_max)

    def params(self) -> ProblemParams:
        return ProblemParams(self.tumor, self.oar, self.delta, self.bounds())

    def query(self) -> EquivalenceQuery:
        return EquivalenceQuery(self.tumor, self.bounds(), self.gamma)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"problem_kind": self.problem_kind}
        for f in fields(self):
            v = getattr(self, f.name)
            if f.name == "problem_kind" or v is None:
                continue
            if isinstance(v, Radiosensitivity):
                v = {"alpha": v.alpha, "beta": v.beta}
            out[f.name] = v
        return out

    def dumps(self) -> str:
        """Canonical text: sorted keys, two-space indent, trailing newline."""
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def swept(self, name: str, value: float) -> ProblemFile:
        if name in ("alpha_t", "beta_t"):
            t = self.tumor
            sens = Radiosensitivity(value, t.beta) if name == "alpha_t" else Radiosensitivity(t.alpha, value)
            return replace(self, tumor=sens)
        if name in ("alpha_0", "beta_0"):
            if self.oar is None:
                raise ValidationError(f"{self.problem_kind} has no OAR to sweep")
            o = self.oar
            sens = Radiosensitivity(value, o.beta) if name == "alpha_0" else Radiosensitivity(o.alpha, value)
            return replace(self, oar=sens)
        if getattr(self, name) is None:
            raise ValidationError(f"{self.problem_kind} has no field {name} to sweep")
        return replace(self, **{name: float(value)})


def _number(name: str, v: Any) -> float:
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ValidationError(f"{name} must be a number, got {v!r}")
    v = float(v)
    if not math.isfinite(v):
        raise ValidationError(f"{name} must be finite")
    return v


def _integer(name: str, v: Any) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise ValidationError(f"{name} must be an integer, got {v!r}")
    return v


def _sens(name: str, v: Any) -> Radiosensitivity:
    if not isinstance(v, dict) or set(v) != {"alpha", "beta"}:
        raise ValidationError(f"{name} must be an object with exactly alpha and beta")
    return Radiosensitivity(_number(f"{name}.alpha", v["alpha"]), _number(f"{name}.beta", v["beta"]))


def load_problem(path: str) -> ProblemFile:
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path} is not valid JSON: {exc}") from None
    return ProblemFile.from_dict(raw)


# -- solving -------------------------------------------------------------------

def _fixed_report(pf: ProblemFile) -> SolutionReport:
    params = pf.params()
    n, gamma = pf.n_fixed, pf.gamma
    if pf.problem_kind == "p1":
        protocol = solve_p1_fixed(params, gamma, n)
        th = p1_thresholds(params, gamma)
        primary, secondary = tumor_effect(params.tumor, protocol), oar_effect(params, protocol)
    else:
        protocol = solve_p2_fixed(params, gamma, n)
        th = p2_thresholds(params, gamma)
        primary, secondary = oar_effect(params, protocol), tumor_effect(params.tumor, protocol)
    return SolutionReport(
        kind=pf.problem_kind, case=FixedNCase.FIXED_N, n_opt=n, protocol=protocol,
        objective_primary=primary, objective_secondary=secondary,
        constraint_active=is_active(secondary, gamma), gamma=gamma, thresholds=th,
    )


def solve_file(pf: ProblemFile) -> SolutionReport:
    if pf.problem_kind in ("p1", "p2") and pf.n_fixed is not None:
        return _fixed_report(pf)
    if pf.problem_kind == "p1":
        return solve_p1(pf.params(), pf.gamma)
    if pf.problem_kind == "p2":
        return solve_p2(pf.params(), pf.gamma)
    if pf.problem_kind == "p3":
        return min_total_dose(pf.query())
    raise ValidationError("bed files are handled by the bed subcommand")


def oracle_problem(pf: ProblemFile) -> OracleProblem:
    if pf.problem_kind == "p1":
        return OracleProblem.p1(pf.params(), pf.gamma)
    if pf.problem_kind == "p2":
        return OracleProblem.p2(pf.params(), pf.gamma)
    return OracleProblem.p3(pf.tumor, pf.bounds(), pf.gamma)


def oracle_n_range(pf: ProblemFile) -> tuple[int, int]:
    """Fraction counts the oracle must scan to cover every candidate."""
    if pf.n_fixed is not None:
        return pf.n_fixed, pf.n_fixed
    if pf.problem_kind == "p1":
        return 1, max(1, floor_tol(p1_thresholds(pf.params(), pf.gamma).rho))
    _, rho = tumor_thresholds(pf.tumor, pf.bounds(), pf.gamma)
    return 1, ceil_tol(rho)


# -- rendering -----------------------------------------------------------------

class Fmt:
    """Number formatting: ``digits`` significant digits, or full repr when None."""

    def __init__(self, digits: int | None):
        self.digits = digits

    def num(self, x: float | None) -> float | None:
        if x is None or self.digits is None or not math.isfinite(x):
            return None if x is None or (isinstance(x, float) and math.isnan(x)) else x
        return float(f"{x:.{self.digits}g}")

    def text(self, x: float) -> str:
        if self.digits is None:
            return repr(float(x))
        return f"{x:.{self.digits}g}"

    def groups(self, p: Protocol) -> list[dict[str, Any]]:
        return [{"count": c, "dose": self.num(d)} for c, d in p.groups]


def report_doc(pf: ProblemFile, rep: SolutionReport, fmt: Fmt) -> dict[str, Any]:
    """Machine form of a report; the key set never depends on the case."""
    th: Thresholds = rep.thresholds
    tumor = tumor_effect(pf.tumor, rep.protocol)
    oar = oar_effect(pf.params(), rep.protocol) if pf.problem_kind in ("p1", "p2") else None
    sign = omega_sign(pf.params()) if pf.problem_kind in ("p1", "p2") else None
    return {
        "problem_kind": rep.kind,
        "case": rep.case.value,
        "n_opt": rep.n_opt,
        "protocol": fmt.groups(rep.protocol),
        "protocol_text": rep.protocol.render(3),
        "objective_primary": fmt.num(rep.objective_primary),
        "objective_secondary": fmt.num(rep.objective_secondary),
        "tumor_effect": fmt.num(tumor),
        "oar_effect": fmt.num(oar),
        "total_dose": fmt.num(rep.protocol.total_dose),
        "gamma": fmt.num(rep.gamma),
        "constraint_active": rep.constraint_active,
        "thresholds": {"lam": fmt.num(th.lam), "rho": fmt.num(th.rho), "omega": fmt.num(th.omega)},
        "omega_sign": sign,
        "alternates": [{"n": n, "protocol": fmt.groups(p)} for n, p in rep.alternates],
    }


def _human_report(doc: dict[str, Any], fmt: Fmt) -> str:
    def t(x):
        return "-" if x is None else fmt.text(x)

    th = doc["thresholds"]
    lines = [
        f"problem     {doc['problem_kind']}",
        f"case        {doc['case']}",
        f"N           {doc['n_opt']}",
        f"protocol    {doc['protocol_text']}",
        f"E_T         {t(doc['tumor_effect'])}",
        f"E_OAR       {t(doc['oar_effect'])}",
        f"total dose  {t(doc['total_dose'])} Gy",
        f"constraint  {'active' if doc['constraint_active'] else 'slack'} (gamma={t(doc['gamma'])})",
        f"thresholds  lambda={t(th['lam'])} rho={t(th['rho'])} omega={t(th['omega'])}",
    ]
    if doc["alternates"]:
        alts = ", ".join(str(a["n"]) for a in doc["alternates"][:10])
        more = "" if len(doc["alternates"]) <= 10 else f" (+{len(doc['alternates']) - 10} more)"
        lines.append(f"alternates  N = {alts}{more}")
    return "\n".join(lines) + "\n"


def _dump(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# -- subcommands ---------------------------------------------------------------

def cmd_solve(args, out) -> int:
    pf = load_problem(args.input)
    if pf.problem_kind == "bed":
        raise ValidationError("use the bed subcommand for bed files")
    fmt = Fmt(args.precision)
    doc = report_doc(pf, solve_file(pf), fmt)
    out.write(_dump(doc) if args.format == "machine" else _human_report(doc, fmt))
    return EXIT_OK


def _sweep_values(args) -> np.ndarray:
    if args.sweep_param not in SWEEP_PARAMS:
        raise ValidationError(f"--sweep-param must be one of {SWEEP_PARAMS}")
    if args.start is None or args.stop is None:
        raise ValidationError("sweep needs --start and --stop")
    if not args.start < args.stop:
        raise ValidationError(f"sweep needs start < stop, got {args.start} and {args.stop}")
    if args.steps < 2:
        raise ValidationError(f"sweep needs at least 2 steps, got {args.steps}")
    return np.linspace(args.start, args.stop, args.steps)


def monotonicity(ns: list[int]) -> str:
    if len(ns) < 2:
        return "undetermined"
    up = all(a <= b for a, b in zip(ns, ns[1:]))
    down = all(a >= b for a, b in zip(ns, ns[1:]))
    if up and down:
        return "constant"
    return "non-decreasing" if up else "non-increasing" if down else "not monotone"


SWEEP_COLUMNS = ("value", "status", "n_opt", "case", "objective_primary", "objective_secondary", "omega_sign")


def sweep_rows(pf: ProblemFile, name: str, values) -> list[dict[str, Any]]:
    # validate every swept instance before solving any of them
    files = [pf.swept(name, float(v)) for v in values]
    for f in files:
        f.validate()
    rows = []
    for v, f in zip(values, files):
        sign = omega_sign(f.params()) if f.problem_kind in ("p1", "p2") else None
        row = {"value": float(v), "status": "ok", "n_opt": None, "case": None,
               "objective_primary": None, "objective_secondary": None, "omega_sign": sign}
        try:
            rep = solve_file(f)
        except (Infeasible, InfeasibleN) as exc:
            row["status"] = "infeasible"
            row["case"] = type(exc).__name__
        else:
            row.update(n_opt=rep.n_opt, case=rep.case.value,
                       objective_primary=rep.objective_primary,
                       objective_secondary=rep.objective_secondary)
        rows.append(row)
    return rows


def cmd_sweep(args, out) -> int:
    pf = load_problem(args.input)
    if pf.problem_kind == "bed":
        raise ValidationError("bed files cannot be swept")
    values = _sweep_values(args)
    rows = sweep_rows(pf, args.sweep_param, values)
    fmt = Fmt(args.precision)
    ns = [r["n_opt"] for r in rows if r["n_opt"] is not None]

    def cell(k, v):
        if v is None:
            return ""
        if isinstance(v, float):
            return fmt.text(v)
        return str(v)

    if args.format == "machine":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("parameter",) + SWEEP_COLUMNS)
        for r in rows:
            w.writerow([args.sweep_param] + [cell(k, r[k]) for k in SWEEP_COLUMNS])
        out.write(buf.getvalue())
    else:
        widths = [max(len(c), 12) for c in SWEEP_COLUMNS]
        out.write("  ".join(c.ljust(w) for c, w in zip(SWEEP_COLUMNS, widths)).rstrip() + "\n")
        for r in rows:
            out.write("  ".join(cell(k, r[k]).ljust(w) for k, w in zip(SWEEP_COLUMNS, widths)).rstrip() + "\n")
    out.write(f"# summary: N over {args.sweep_param} is {monotonicity(ns)}\n")
    return EXIT_OK


@dataclass(frozen=True)
class InjectedReport:
    """Just enough of a solution report for :func:`verify`."""

    protocol: Protocol
    objective_primary: float
    constraint_active: bool
    n_opt: int


def load_report(path: str) -> InjectedReport:
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
        groups = tuple((int(g["count"]), float(g["dose"])) for g in raw["protocol"])
        return InjectedReport(
            protocol=Protocol(groups),
            objective_primary=float(raw["objective_primary"]),
            constraint_active=bool(raw["constraint_active"]),
            n_opt=int(raw["n_opt"]),
        )
    except OSError as exc:
        raise ValidationError(f"cannot read report {path}: {exc.strerror}") from None
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"report {path} is malformed: {exc}") from None


def cmd_verify(args, out) -> int:
    pf = load_problem(args.input)
    if pf.problem_kind == "bed":
        raise ValidationError("bed files have nothing to verify")
    fmt = Fmt(args.precision)
    problem = oracle_problem(pf)
    if args.report:
        rep = load_report(args.report)
        report_part = None
    else:
        solved = solve_file(pf)
        rep = solved
        report_part = report_doc(pf, solved, fmt)
    diag = verify(rep, problem, tol=args.tol)

    lo, hi = oracle_n_range(pf)
    oracle_doc: dict[str, Any] | None = None
    skipped = None
    if hi > args.oracle_max_n:
        skipped = f"N range [{lo}, {hi}] exceeds --oracle-max-n={args.oracle_max_n}"
    else:
        cfg = OracleConfig(grid_step=args.oracle_step, max_exhaustive_n=args.oracle_max_n, n_range=(lo, hi))
        try:
            if lo == hi:
                res = grid_best_fixed_n(problem, lo, cfg, analytic=rep.objective_primary)
                floor = -1e-9 * max(1.0, abs(rep.objective_primary))
                ok = floor <= res.gap_vs_analytic <= problem.lipschitz(rep.n_opt) * cfg.grid_step
            else:
                res, ok, _ = check_against_oracle(problem, rep.objective_primary, rep.n_opt, cfg)
        except TooLarge as exc:
            skipped = str(exc)
        else:
            diag.oracle, diag.oracle_ok = res, ok
            if not ok:
                diag.messages.append(
                    f"oracle gap {res.gap_vs_analytic:.3e} outside [0, {problem.lipschitz(rep.n_opt) * cfg.grid_step:.3e}]"
                )
            oracle_doc = {
                "best_n": res.best_n,
                "best_protocol": fmt.groups(res.best_protocol),
                "best_objective": fmt.num(res.best_objective),
                "gap_vs_analytic": fmt.num(res.gap_vs_analytic),
                "slack_bound": fmt.num(problem.lipschitz(rep.n_opt) * cfg.grid_step),
                "evaluations": res.evaluations,
                "grid_step": cfg.grid_step,
                "n_range": [lo, hi],
            }

    doc = {
        "passed": diag.passed,
        "checks": {
            "bounds_ok": diag.bounds_ok,
            "constraint_ok": diag.constraint_ok,
            "slack": fmt.num(diag.slack),
            "activity_required": diag.activity_required,
            "activity_ok": diag.activity_ok,
            "objective_ok": diag.objective_ok,
            "local_ok": diag.local_ok,
            "oracle_ok": diag.oracle_ok,
        },
        "oracle": oracle_doc,
        "oracle_skipped": skipped,
        "messages": list(diag.messages),
        "report": report_part,
    }
    if args.format == "machine":
        out.write(_dump(doc))
    else:
        c = doc["checks"]
        out.write(f"verification {'PASSED' if diag.passed else 'FAILED'}\n")
        for k in ("bounds_ok", "constraint_ok", "activity_ok", "objective_ok", "local_ok", "oracle_ok"):
            v = c[k]
            out.write(f"  {k:<14} {'skipped' if v is None else 'yes' if v else 'NO'}\n")
        out.write(f"  slack          {fmt.text(diag.slack)}\n")
        if oracle_doc:
            out.write(
                f"  oracle         N={oracle_doc['best_n']} objective={fmt.text(res.best_objective)} "
                f"gap={fmt.text(res.gap_vs_analytic)} bound={fmt.text(oracle_doc['slack_bound'])}\n"
            )
        elif skipped:
            out.write(f"  oracle         skipped: {skipped}\n")
        for m in diag.messages:
            out.write(f"  ! {m}\n")
    return EXIT_OK if diag.passed else EXIT_VERIFY


def cmd_bed(args, out) -> int:
    pf = load_problem(args.input)
    if pf.problem_kind != "bed":
        raise ValidationError(f"bed subcommand needs problem_kind=bed, got {pf.problem_kind}")
    fmt = Fmt(args.precision)
    conv = convert_bed(pf.tumor, pf.n, pf.d, pf.n_target, pf.bounds())
    doc = {
        "problem_kind": "bed",
        "n": conv.n,
        "dose": fmt.num(conv.dose),
        "n_target": conv.n_target,
        "dose_target": fmt.num(conv.dose_target),
        "effect": fmt.num(conv.effect),
        "effect_target": fmt.num(conv.effect_target),
        "within_bounds": conv.within_bounds,
    }
    if args.format == "machine":
        out.write(_dump(doc))
    else:
        out.write(
            f"{conv.n} x {fmt.text(conv.dose)} Gy  ->  {conv.n_target} x {fmt.text(conv.dose_target)} Gy\n"
            f"E_T  {fmt.text(conv.effect)}  vs  {fmt.text(conv.effect_target)}\n"
        )
        if conv.within_bounds is False:
            out.write("warning: converted dose lies outside [d_min, d_max]\n")
    return EXIT_OK


# -- entry point ---------------------------------------------------------------

def _precision(raw: str) -> int | None:
    if raw == "full":
        return None
    try:
        v = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError("precision must be an integer or 'full'") from None
    if not 1 <= v <= 17:
        raise argparse.ArgumentTypeError("precision must lie in 1..17")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fraxion", description="Optimal LQ fractionation schedules.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, help="problem file (JSON)")
    common.add_argument("--format", choices=("human", "machine"), default="human")
    common.add_argument("--precision", type=_precision, default=6,
                        help="significant digits, or 'full' (default 6)")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("solve", parents=[common], help="solve a p1/p2/p3 problem")
    sw = sub.add_parser("sweep", parents=[common], help="solve along a parameter sweep")
    sw.add_argument("--sweep-param", required=True)
    sw.add_argument("--start", type=float)
    sw.add_argument("--stop", type=float)
    sw.add_argument("--steps", type=int, default=10)
    ve = sub.add_parser("verify", parents=[common], help="check a solution against diagnostics and the oracle")
    ve.add_argument("--oracle-step", type=float, default=1e-2)
    ve.add_argument("--oracle-max-n", type=int, default=4)
    ve.add_argument("--tol", type=float, default=1e-6, help="local move size for optimality checks")
    ve.add_argument("--report", help="verify this machine-format report instead of solving")
    sub.add_parser("bed", parents=[common], help="uniform-to-uniform equivalent dose")
    return parser


COMMANDS = {"solve": cmd_solve, "sweep": cmd_sweep, "verify": cmd_verify, "bed": cmd_bed}


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        return COMMANDS[args.command](args, out)
    except (Infeasible, InfeasibleN) as exc:
        err.write(f"infeasible: {exc}\n")
        return EXIT_INFEASIBLE
    except (ValidationError, FraxionError, ValueError) as exc:
        err.write(f"invalid: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    raise SystemExit(main())
