"""Healing problem: maximise the tumour effect under an OAR effect budget.

The fraction count ``N`` is an unknown.  For a fixed ``N`` the budget is
either slack (all fractions at ``d_max`` fit) or active, and on the active
surface the tumour effect is an affine function of the total dose whose
slope has the sign of ``omega``.  That sign decides between equal doses
(many fractions) and a boundary structure (few fractions, at most one dose
strictly inside the bounds).
"""

from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass, field

from fraxion.errors import (
    CapExceeded,
    Infeasible,
    InfeasibleN,
    InternalConsistencyError,
    ValidationError,
)
from fraxion.radiobiology import (
    DoseBounds,
    ProblemParams,
    Protocol,
    Radiosensitivity,
    Thresholds,
    ceil_tol,
    floor_tol,
    near_int,
    oar_effect,
    omega_sign,
    p1_thresholds,
    phi,
    solve_phi,
    tumor_effect,
    uniform_dose_for_budget,
)

FEAS_RTOL = 1e-9
TIE_RTOL = 1e-12
SNAP_TOL = 1e-9
DEFAULT_N_CAP = 10**9
MAX_ALTERNATES = 1000


class P1Case(str, enum.Enum):
    INFEASIBLE = "Infeasible"
    SINGLE_MIN_FORCED = "SingleMinForced"
    SINGLE_DOSE = "SingleDose"
    ALL_MAX_WINDOW = "AllMaxWindow"
    HYPER_UNIFORM = "HyperUniform"
    HYPO_COMPARED = "HypoCompared"
    OMEGA_ZERO_FAMILY = "OmegaZeroFamily"


@dataclass(frozen=True)
class SolutionReport:
    """Optimal pair ``(n_opt, protocol)`` with the branch that produced it.

    ``objective_primary`` is the optimised effect (tumour for P1, OAR for
    P2, total dose for the equivalence problem) and ``objective_secondary``
    the other one.  ``alternates`` holds co-optimal ``(N, protocol)`` pairs.
    """

    kind: str
    case: enum.Enum
    n_opt: int
    protocol: Protocol
    objective_primary: float
    objective_secondary: float
    constraint_active: bool
    gamma: float
    thresholds: Thresholds
    alternates: tuple[tuple[int, Protocol], ...] = field(default=())

    def __post_init__(self) -> None:
        if self.protocol.n != self.n_opt:
            raise InternalConsistencyError(
                f"n_opt={self.n_opt} but protocol has {self.protocol.n} fractions"
            )


def default_n_cap() -> int:
    raw = os.environ.get("FRAXION_N_CAP")
    if raw is None or raw.strip() == "":
        return DEFAULT_N_CAP
    try:
        cap = int(float(raw))
    except ValueError:
        raise ValidationError(f"FRAXION_N_CAP must be a number, got {raw!r}") from None
    if cap < 1:
        raise ValidationError(f"FRAXION_N_CAP must be >= 1, got {cap}")
    return cap


def is_active(value: float, gamma: float) -> bool:
    return abs(value - gamma) <= FEAS_RTOL * max(1.0, abs(gamma))


def snap_into(dose: float, bounds: DoseBounds) -> float:
    """Clamp a computed dose onto ``bounds`` when it misses by rounding only."""
    if bounds.d_min <= dose <= bounds.d_max:
        return dose
    if bounds.d_min - dose > SNAP_TOL * max(1.0, bounds.d_min):
        raise InternalConsistencyError(f"dose {dose} below d_min={bounds.d_min}")
    if dose - bounds.d_max > SNAP_TOL * max(1.0, bounds.d_max):
        raise InternalConsistencyError(f"dose {dose} above d_max={bounds.d_max}")
    return min(max(dose, bounds.d_min), bounds.d_max)


def boundary_mix(
    sens: Radiosensitivity, scale: float, bounds: DoseBounds, gamma: float, n: int
) -> tuple[int, float | None]:
    """Split ``n`` fractions into ``K`` at ``d_min``, at most one interior dose, rest at ``d_max``.

    The split makes the total effect equal ``gamma`` while keeping the sum
    of doses minimal.  Returns ``(K, interior)`` where ``interior`` is None
    when the boundary doses alone hit ``gamma``.
    """
    lo = phi(sens, scale, bounds.d_min)
    hi = phi(sens, scale, bounds.d_max)
    tol = FEAS_RTOL * max(1.0, gamma)
    if gamma < n * lo - tol or gamma > n * hi + tol:
        raise InfeasibleN(
            f"effect {gamma} outside [{n * lo}, {n * hi}] reachable with {n} fractions"
        )
    m = min(max((n * hi - gamma) / (hi - lo), 0.0), float(n))
    if near_int(m):
        return int(round(m)), None
    k = math.floor(m)
    target = gamma - k * lo - (n - k - 1) * hi
    d = solve_phi(sens, scale, max(target, 0.0))
    # roots within SNAP_TOL of a bound fold into that bound's group
    if abs(d - bounds.d_min) <= SNAP_TOL * max(1.0, bounds.d_min):
        return k + 1, None
    if abs(d - bounds.d_max) <= SNAP_TOL * max(1.0, bounds.d_max):
        return k, None
    if not bounds.d_min < d < bounds.d_max:
        raise InternalConsistencyError(f"interior dose {d} outside ({bounds.d_min}, {bounds.d_max})")
    return k, d


def mix_protocol(n: int, k: int, interior: float | None, bounds: DoseBounds) -> Protocol:
    groups = []
    if k:
        groups.append((k, bounds.d_min))
    rest = n - k
    if interior is not None:
        groups.append((1, interior))
        rest -= 1
    if rest:
        groups.append((rest, bounds.d_max))
    return Protocol(tuple(groups), bounds)


def uniform_protocol(sens: Radiosensitivity, scale: float, bounds: DoseBounds, n: int, gamma: float) -> Protocol:
    d = snap_into(uniform_dose_for_budget(sens, scale, n, gamma), bounds)
    return Protocol.uniform(n, d, bounds)


def solve_p1_fixed(params: ProblemParams, gamma_oar: float, n: int) -> Protocol:
    """Best protocol with exactly ``n`` fractions under the OAR budget."""
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ValidationError(f"n must be a positive integer, got {n!r}")
    n = int(n)
    th = p1_thresholds(params, gamma_oar)
    b = params.bounds
    if n > floor_tol(th.rho):
        raise InfeasibleN(f"{n} fractions at d_min already exceed the OAR budget (rho={th.rho})")
    # unclamped: a single d_max fraction may itself break the budget
    if n <= floor_tol(gamma_oar / phi(params.oar, params.delta, b.d_max)):
        return Protocol.uniform(n, b.d_max, b)
    if omega_sign(params) < 0:
        k, d = boundary_mix(params.oar, params.delta, b, gamma_oar, n)
        return mix_protocol(n, k, d, b)
    return uniform_protocol(params.oar, params.delta, b, n, gamma_oar)


def _report(params, gamma, th, case, protocol, alternates=()) -> SolutionReport:
    e_oar = oar_effect(params, protocol)
    return SolutionReport(
        kind="p1",
        case=case,
        n_opt=protocol.n,
        protocol=protocol,
        objective_primary=tumor_effect(params.tumor, protocol),
        objective_secondary=e_oar,
        constraint_active=is_active(e_oar, gamma),
        gamma=gamma,
        thresholds=th,
        alternates=tuple(alternates),
    )


def solve_p1(
    params: ProblemParams,
    gamma_oar: float,
    n_cap: int | None = None,
    max_alternates: int = MAX_ALTERNATES,
) -> SolutionReport:
    """Resolve the healing problem over all fraction counts."""
    th = p1_thresholds(params, gamma_oar)
    cap = default_n_cap() if n_cap is None else n_cap
    if th.rho > cap:
        raise CapExceeded(f"rho={th.rho:.6g} exceeds the fraction cap {cap}")
    b = params.bounds
    rho, lam = th.rho, th.lam

    if near_int(rho) and round(rho) == 1:
        return _report(params, gamma_oar, th, P1Case.SINGLE_MIN_FORCED, Protocol.uniform(1, b.d_min, b))
    if rho < 1:
        raise Infeasible(
            f"gamma_oar={gamma_oar} is below the OAR effect of one d_min fraction "
            f"({phi(params.oar, params.delta, b.d_min):.6g}); rho={rho:.6g} < 1"
        )
    if rho < 2 and not near_int(rho):
        d0 = solve_phi(params.oar, params.delta, gamma_oar)
        d = b.d_max if d0 >= b.d_max else snap_into(d0, b)
        return _report(params, gamma_oar, th, P1Case.SINGLE_DOSE, Protocol.uniform(1, d, b))

    n_lo, n_hi = floor_tol(lam), floor_tol(rho)
    if n_lo == n_hi:
        return _report(params, gamma_oar, th, P1Case.ALL_MAX_WINDOW, Protocol.uniform(n_lo, b.d_max, b))

    sign = omega_sign(params)
    if sign > 0:
        return _report(
            params, gamma_oar, th, P1Case.HYPER_UNIFORM,
            uniform_protocol(params.oar, params.delta, b, n_hi, gamma_oar),
        )
    if sign == 0:
        rep = uniform_protocol(params.oar, params.delta, b, n_hi, gamma_oar)
        alts = [
            (n, uniform_protocol(params.oar, params.delta, b, n, gamma_oar))
            for n in range(ceil_tol(lam), n_hi)
        ][:max_alternates]
        return _report(params, gamma_oar, th, P1Case.OMEGA_ZERO_FAMILY, rep, alts)

    # omega < 0: boundary structure at ceil(lam) against all-d_max at floor(lam)
    n1 = ceil_tol(lam)
    k, d = boundary_mix(params.oar, params.delta, b, gamma_oar, n1)
    candidates = [mix_protocol(n1, k, d, b)]
    n2 = n_lo
    if n2 != n1 and n2 * phi(params.oar, params.delta, b.d_max) <= gamma_oar * (1 + FEAS_RTOL):
        candidates.append(Protocol.uniform(n2, b.d_max, b))
    scored = sorted(
        ((tumor_effect(params.tumor, p), p) for p in candidates),
        key=lambda t: (-t[0], t[1].n),
    )
    best_e, best = scored[0]
    alts = []
    for e, p in scored[1:]:
        if abs(e - best_e) <= TIE_RTOL * max(1.0, abs(best_e)):
            if p.n < best.n:
                best, p = p, best
            alts.append((p.n, p))
    return _report(params, gamma_oar, th, P1Case.HYPO_COMPARED, best, alts)
