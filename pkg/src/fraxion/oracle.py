"""Brute-force verification of the analytical solvers.

The oracle searches dose grids directly and knows nothing about the
solution structure.  The only facts it relies on are properties of the
effect functions themselves:

* effects are symmetric in the doses, so multisets (sorted tuples) cover
  the search space;
* per-fraction effects are increasing in the dose, so when the last dose
  is left continuous its best value sits where the constraint binds.

Nothing here imports the solver modules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field


import numpy as np

from fraxion.errors import NoFeasibleGridPoint, TooLarge, ValidationError
from fraxion.radiobiology import (
    DoseBounds,
    ProblemParams,
    Protocol,
    Radiosensitivity,
    phi,
)

FEAS_RTOL = 1e-9


@dataclass(frozen=True)
class Quadratic:
    """Per-fraction effect ``lin*d + quad*d^2`` summed over fractions."""

    lin: float
    quad: float

    @classmethod
    def of(cls, sens: Radiosensitivity, scale: float = 1.0) -> Quadratic:
        return cls(sens.alpha * scale, sens.beta * scale * scale)

    def __call__(self, d):
        return self.lin * d + self.quad * d * d

    def slope_bound(self, d_max: float) -> float:
        return self.lin + 2.0 * self.quad * d_max

    def inverse(self, target):
        """Non-negative dose with per-fraction effect ``target`` (vectorised)."""
        target = np.asarray(target, dtype=float)
        if self.quad == 0:
            return target / self.lin
        return 2.0 * target / (self.lin + np.sqrt(self.lin**2 + 4.0 * self.quad * target))


@dataclass(frozen=True)
class OracleProblem:
    """An objective to optimise over doses subject to one effect constraint.

    ``upper`` constraints read ``sum c(d) <= gamma`` (OAR budget); otherwise
    ``sum c(d) >= gamma`` (tumour floor).
    """

    kind: str
    objective: Quadratic
    constraint: Quadratic
    gamma: float
    bounds: DoseBounds
    maximize: bool
    upper: bool

    @classmethod
    def p1(cls, params: ProblemParams, gamma_oar: float) -> OracleProblem:
        return cls("p1", Quadratic.of(params.tumor), Quadratic.of(params.oar, params.delta),
                   float(gamma_oar), params.bounds, maximize=True, upper=True)

    @classmethod
    def p2(cls, params: ProblemParams, gamma_t: float) -> OracleProblem:
        return cls("p2", Quadratic.of(params.oar, params.delta), Quadratic.of(params.tumor),
                   float(gamma_t), params.bounds, maximize=False, upper=False)

    @classmethod
    def p3(cls, tumor: Radiosensitivity, bounds: DoseBounds, gamma_t: float) -> OracleProblem:
        # lowest total dose with tumour effect at least gamma
        return cls("p3", Quadratic(1.0, 0.0), Quadratic.of(tumor), float(gamma_t), bounds,
                   maximize=False, upper=False)

    def feasible(self, value) -> np.ndarray | bool:
        return value <= self.gamma if self.upper else value >= self.gamma

    def better(self, a: float, b: float) -> bool:
        return a > b if self.maximize else a < b

    def lipschitz(self, n: int) -> float:
        """Objective change bound per unit of grid step for ``n`` fractions."""
        return 2.0 * n * self.objective.slope_bound(self.bounds.d_max)


@dataclass(frozen=True)
class OracleConfig:
    grid_step: float
    max_exhaustive_n: int = 4
    n_range: tuple[int, int] = (1, 4)
    # leave the last dose continuous, pinned where the constraint binds
    complete_last: bool = False
    # largest number of multisets materialised at once
    enumeration_limit: int = 4_000_000
    # above this many n-tuples, switch to the (equally exact) half-table search
    explicit_limit: int = 250_000

    def __post_init__(self) -> None:
        if not (math.isfinite(self.grid_step) and self.grid_step > 0):
            raise ValidationError(f"grid_step must be > 0, got {self.grid_step}")
        if self.max_exhaustive_n < 1:
            raise ValidationError("max_exhaustive_n must be >= 1")
        lo, hi = self.n_range
        if not 1 <= lo <= hi:
            raise ValidationError(f"bad n_range {self.n_range}")


@dataclass(frozen=True)
class OracleResult:
    best_n: int
    best_protocol: Protocol
    best_objective: float
    gap_vs_analytic: float
    evaluations: int
    method: str = "enumerate"
    slack_bound: float = math.nan
    per_n: dict[int, float] = field(default_factory=dict, compare=False)


def dose_grid(bounds: DoseBounds, step: float) -> np.ndarray:
    """``d_min, d_min+h, ...`` with ``d_max`` always present as the last point."""
    span = bounds.d_max - bounds.d_min
    k = int(math.floor(span / step + 1e-9))
    pts = bounds.d_min + step * np.arange(k + 1, dtype=float)
    if bounds.d_max - pts[-1] > 1e-12 * bounds.d_max:
        pts = np.append(pts, bounds.d_max)
    else:
        pts[-1] = bounds.d_max
    return pts


def multiset_count(g: int, n: int) -> int:
    return math.comb(g + n - 1, n)


def multisets(g: int, n: int) -> np.ndarray:
    """All non-decreasing index tuples of length ``n`` over ``range(g)``, lexicographic."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    idx = np.arange(g, dtype=np.int64)[:, None]
    for _ in range(n - 1):
        last = idx[:, -1]
        reps = g - last
        starts = np.cumsum(reps) - reps
        offsets = np.arange(int(reps.sum()), dtype=np.int64) - np.repeat(starts, reps)
        newcol = np.repeat(last, reps) + offsets
        idx = np.hstack([np.repeat(idx, reps, axis=0), newcol[:, None]])
    return idx


def _gap(problem: OracleProblem, analytic: float | None, found: float) -> float:
    if analytic is None:
        return math.nan
    return analytic - found if problem.maximize else found - analytic


def _pick(problem: OracleProblem, values: np.ndarray, mask: np.ndarray) -> int | None:
    """First index of the best masked value (first == lexicographically smallest)."""
    if not mask.any():
        return None
    masked = np.where(mask, values, -np.inf if problem.maximize else np.inf)
    return int(np.argmax(masked) if problem.maximize else np.argmin(masked))


def _enumerate(problem, grid, n, a, c):
    idx = multisets(len(grid), n)
    obj = a[idx].sum(axis=1)
    con = c[idx].sum(axis=1)
    i = _pick(problem, obj, problem.feasible(con))
    if i is None:
        return None
    return float(obj[i]), list(grid[idx[i]]), len(idx)


def _meet_in_middle(problem, grid, n, a, c, limit):
    """Exact grid optimum via two half-size multiset tables.

    The objective and constraint are both sums over fractions, so the best
    completion of a left half is a prefix/suffix extremum over the right
    halves sorted by constraint usage.
    """
    n_left = n // 2
    n_right = n - n_left
    g = len(grid)
    if multiset_count(g, n_right) > limit:
        raise TooLarge(f"meet-in-the-middle tables for n={n} over {g} grid points exceed {limit}")
    left = multisets(g, n_left)
    right = multisets(g, n_right)
    lo, lc = a[left].sum(axis=1), c[left].sum(axis=1)
    ro, rc = a[right].sum(axis=1), c[right].sum(axis=1)
    order = np.argsort(rc, kind="stable")
    rc_s, ro_s = rc[order], ro[order]
    m = len(rc_s)
    if problem.upper:
        # best objective among right halves with usage <= budget left over
        run = np.maximum.accumulate(ro_s) if problem.maximize else np.minimum.accumulate(ro_s)
        arg = _running_arg(ro_s, problem.maximize)
        j = np.searchsorted(rc_s, problem.gamma - lc, side="right") - 1
        # searchsorted on a difference can be off by one ulp
        bad = (j >= 0) & (lc + rc_s[np.clip(j, 0, m - 1)] > problem.gamma)
        j = np.where(bad, j - 1, j)
        ok = j >= 0
        jj = np.clip(j, 0, m - 1)
        total = lo + run[jj]
        pick_r = arg[jj]
    else:
        rev = ro_s[::-1]
        run = (np.maximum.accumulate(rev) if problem.maximize else np.minimum.accumulate(rev))[::-1]
        arg = (m - 1 - _running_arg(rev, problem.maximize))[::-1]
        j = np.searchsorted(rc_s, problem.gamma - lc, side="left")
        bad = (j < m) & (lc + rc_s[np.clip(j, 0, m - 1)] < problem.gamma)
        j = np.where(bad, j + 1, j)
        ok = j < m
        jj = np.clip(j, 0, m - 1)
        total = lo + run[jj]
        pick_r = arg[jj]
    i = _pick(problem, total, ok)
    if i is None:
        return None
    doses = sorted(list(grid[left[i]]) + list(grid[right[order[pick_r[i]]]]))
    return float(total[i]), doses, len(left) + len(right) + len(left)


def _running_arg(values: np.ndarray, maximize: bool) -> np.ndarray:
    """Index of the running extremum (first occurrence) at each position."""
    n = len(values)
    run = np.maximum.accumulate(values) if maximize else np.minimum.accumulate(values)
    is_new = np.empty(n, dtype=bool)
    is_new[0] = True
    is_new[1:] = run[1:] != run[:-1]
    pos = np.where(is_new, np.arange(n), 0)
    return np.maximum.accumulate(pos)


def _partial_chunks(g: int, m: int, limit: int):
    """Yield lexicographic blocks of the size-``m`` multisets, each at most ``limit`` rows."""
    if multiset_count(g, m) <= limit:
        yield multisets(g, m)
        return
    if m <= 1 or multiset_count(g, m - 1) > limit:
        raise TooLarge(f"{multiset_count(g, m)} partial multisets cannot be split under {limit}")
    for first in range(g):
        tail = multisets(g - first, m - 1) + first
        yield np.hstack([np.full((len(tail), 1), first, dtype=np.int64), tail])


def _complete_last(problem, grid, n, a, c, limit):
    b = problem.bounds
    c_lo, c_hi = problem.constraint(b.d_min), problem.constraint(b.d_max)
    best = None
    evals = 0
    for idx in _partial_chunks(len(grid), n - 1, limit):
        evals += len(idx)
        residual = problem.gamma - c[idx].sum(axis=1)
        root = problem.constraint.inverse(np.clip(residual, 0.0, None))
        if problem.upper:
            # constraint and objective both rise with the dose: go as high as allowed
            ok = residual >= c_lo
            last = np.where(residual >= c_hi, b.d_max, np.clip(root, b.d_min, b.d_max))
        else:
            ok = residual <= c_hi
            last = np.where(residual <= c_lo, b.d_min, np.clip(root, b.d_min, b.d_max))
        total = a[idx].sum(axis=1) + problem.objective(last)
        i = _pick(problem, total, ok)
        # strict improvement keeps the lexicographically first optimum
        if i is not None and (best is None or problem.better(float(total[i]), best[0])):
            best = (float(total[i]), sorted(list(grid[idx[i]]) + [float(last[i])]))
    if best is None:
        return None
    return best[0], best[1], evals


def grid_best_fixed_n(
    problem: OracleProblem, n: int, cfg: OracleConfig, analytic: float | None = None
) -> OracleResult:
    """Best grid protocol with exactly ``n`` fractions."""
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n}")
    if n > cfg.max_exhaustive_n:
        raise TooLarge(f"n={n} exceeds max_exhaustive_n={cfg.max_exhaustive_n}")
    grid = dose_grid(problem.bounds, cfg.grid_step)
    a = problem.objective(grid)
    c = problem.constraint(grid)
    if cfg.complete_last:
        method, found = "complete-last", _complete_last(problem, grid, n, a, c, cfg.enumeration_limit)
    elif n == 1 or multiset_count(len(grid), n) <= max(cfg.explicit_limit, 1):
        method, found = "enumerate", _enumerate(problem, grid, n, a, c)
    else:
        method, found = "meet-in-middle", _meet_in_middle(problem, grid, n, a, c, cfg.enumeration_limit)
    if found is None:
        raise NoFeasibleGridPoint(
            f"no {n}-fraction protocol on a {cfg.grid_step} Gy grid satisfies the constraint"
        )
    value, doses, evals = found
    protocol = Protocol.from_doses(doses)
    return OracleResult(
        best_n=n,
        best_protocol=protocol,
        best_objective=value,
        gap_vs_analytic=_gap(problem, analytic, value),
        evaluations=evals,
        method=method,
        slack_bound=problem.lipschitz(n) * cfg.grid_step,
        per_n={n: value},
    )


def oracle_solve(
    problem: OracleProblem, cfg: OracleConfig, analytic: float | None = None,
    analytic_n: int | None = None,
) -> OracleResult:
    """Scan ``cfg.n_range`` and return the overall grid optimum.

    ``slack_bound`` uses ``analytic_n`` (the count whose doses get rounded
    onto the grid) when given, else the largest scanned count.
    """
    lo, hi = cfg.n_range
    if hi > cfg.max_exhaustive_n:
        raise TooLarge(f"n_range upper {hi} exceeds max_exhaustive_n={cfg.max_exhaustive_n}")
    best: OracleResult | None = None
    evals = 0
    per_n: dict[int, float] = {}
    for n in range(lo, hi + 1):
        try:
            r = grid_best_fixed_n(problem, n, cfg)
        except NoFeasibleGridPoint:
            continue
        evals += r.evaluations
        per_n[n] = r.best_objective
        if best is None or problem.better(r.best_objective, best.best_objective):
            best = r
    if best is None:
        raise NoFeasibleGridPoint(f"no feasible grid protocol for any n in {cfg.n_range}")
    n_ref = analytic_n if analytic_n is not None else hi
    return OracleResult(
        best_n=best.best_n,
        best_protocol=best.best_protocol,
        best_objective=best.best_objective,
        gap_vs_analytic=_gap(problem, analytic, best.best_objective),
        evaluations=evals,
        method=best.method,
        slack_bound=problem.lipschitz(n_ref) * cfg.grid_step,
        per_n=per_n,
    )


# -- diagnostics for a reported solution -------------------------------------

@dataclass
class Diagnostics:
    bounds_ok: bool
    constraint_ok: bool
    slack: float
    activity_required: bool
    activity_ok: bool
    objective_ok: bool
    local_ok: bool
    messages: list[str] = field(default_factory=list)
    oracle: OracleResult | None = None
    oracle_ok: bool | None = None

    @property
    def passed(self) -> bool:
        checks = [self.bounds_ok, self.constraint_ok, self.activity_ok, self.objective_ok, self.local_ok]
        if self.oracle_ok is not None:
            checks.append(self.oracle_ok)
        return all(checks)


def _effect(q: Quadratic, p: Protocol) -> float:
    return math.fsum(cnt * q(d) for cnt, d in p.groups)


def verify(report, problem: OracleProblem, tol: float = 1e-6) -> Diagnostics:
    """Check a reported solution: bounds, constraint, activity, local optimality.

    ``report`` needs ``protocol``, ``objective_primary`` and
    ``constraint_active`` attributes.
    """
    p: Protocol = report.protocol
    b = problem.bounds
    gamma = problem.gamma
    ftol = FEAS_RTOL * max(1.0, abs(gamma))
    msgs: list[str] = []

    bounds_ok = p.within(b)
    if not bounds_ok:
        msgs.append(f"doses {p.distinct_doses()} leave [{b.d_min}, {b.d_max}]")

    used = _effect(problem.constraint, p)
    slack = gamma - used if problem.upper else used - gamma
    constraint_ok = slack >= -ftol
    if not constraint_ok:
        msgs.append(f"constraint violated by {-slack:.3e}")

    n = p.n
    lo_eff, hi_eff = n * problem.constraint(b.d_min), n * problem.constraint(b.d_max)
    if problem.upper:
        # budget must bind when n all-d_max fractions overshoot it
        required = hi_eff > gamma + ftol and lo_eff <= gamma + ftol
    else:
        required = lo_eff < gamma - ftol and hi_eff >= gamma - ftol
    actually = abs(slack) <= ftol
    activity_ok = (actually == bool(report.constraint_active)) and (actually or not required)
    if not activity_ok:
        msgs.append(
            f"activity mismatch: required={required} reported={report.constraint_active} "
            f"slack={slack:.3e}"
        )

    obj = _effect(problem.objective, p)
    objective_ok = abs(obj - report.objective_primary) <= 1e-9 * max(1.0, abs(obj))
    if not objective_ok:
        msgs.append(f"reported objective {report.objective_primary} != recomputed {obj}")

    local_ok = True
    for _, d in p.groups:
        for step in (tol, -tol):
            nd = d + step
            if not b.contains(nd):
                continue
            moved = _effect(problem.constraint, p) - problem.constraint(d) + problem.constraint(nd)
            if not problem.feasible(moved):
                continue
            new_obj = obj - problem.objective(d) + problem.objective(nd)
            if problem.better(new_obj, obj) and abs(new_obj - obj) > 1e-12 * max(1.0, abs(obj)):
                local_ok = False
                msgs.append(f"moving one {d:.6g} Gy fraction by {step:+g} improves the objective")
    return Diagnostics(bounds_ok, constraint_ok, slack, required, activity_ok, objective_ok, local_ok, msgs)


def check_against_oracle(
    problem: OracleProblem, analytic_objective: float, analytic_n: int, cfg: OracleConfig
) -> tuple[OracleResult, bool, str]:
    """Run :func:`oracle_solve` and test ``0 <= gap <= C*h`` (small float slack below 0)."""
    res = oracle_solve(problem, cfg, analytic=analytic_objective, analytic_n=analytic_n)
    floor = -1e-9 * max(1.0, abs(analytic_objective))
    ok = floor <= res.gap_vs_analytic <= res.slack_bound
    msg = (
        f"oracle N={res.best_n} objective={res.best_objective:.10g} gap={res.gap_vs_analytic:.3e} "
        f"bound={res.slack_bound:.3e}"
    )
    return res, ok, msg


