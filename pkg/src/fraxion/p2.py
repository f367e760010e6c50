"""Palliative problem: minimise the OAR effect subject to a tumour effect floor."""

from __future__ import annotations

import enum
import math

from fraxion.errors import CapExceeded, InfeasibleN, ValidationError
from fraxion.p1 import (
    MAX_ALTERNATES,
    TIE_RTOL,
    SolutionReport,
    uniform_protocol,
    boundary_mix,
    default_n_cap,
    is_active,
    mix_protocol,
)
from fraxion.radiobiology import (
    ProblemParams,
    Protocol,
    ceil_tol,
    floor_tol,
    near_int,
    oar_effect,
    omega_sign,
    p2_thresholds,
    phi,
    tumor_effect,
)


class P2Case(str, enum.Enum):
    SINGLE_MIN_FORCED = "SingleMinForced"
    ALL_MIN_FORCED = "AllMinForced"
    HYPER_ALL_MIN_INTEGER = "HyperAllMinInteger"
    HYPER_COMPARED = "HyperCompared"
    HYPO_STRUCTURE = "HypoStructure"
    OMEGA_ZERO_FAMILY = "OmegaZeroFamily"
    EMPTY_WINDOW_ALL_MIN = "EmptyWindowAllMin"


def active_window(lam: float, rho: float) -> tuple[int, int]:
    """Integers ``N`` with ``lam <= N < rho``, as an inclusive ``(lo, hi)`` pair.

    For these counts the all-``d_min`` protocol misses the floor while the
    all-``d_max`` one meets it, so the floor is active.  ``lo > hi`` means
    the window is empty.
    """
    lo = ceil_tol(lam)
    hi = int(round(rho)) - 1 if near_int(rho) else math.floor(rho)
    return lo, hi


def solve_p2_fixed(params: ProblemParams, gamma_t: float, n: int) -> Protocol:
    """Best protocol with exactly ``n`` fractions meeting the tumour floor."""
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ValidationError(f"n must be a positive integer, got {n!r}")
    n = int(n)
    th = p2_thresholds(params, gamma_t)
    b = params.bounds
    if n < ceil_tol(gamma_t / phi(params.tumor, 1.0, b.d_max)):
        raise InfeasibleN(f"{n} fractions at d_max miss the tumour floor (lambda={th.lam})")
    if n >= ceil_tol(th.rho):
        return Protocol.uniform(n, b.d_min, b)
    if omega_sign(params) < 0:
        k, d = boundary_mix(params.tumor, 1.0, b, gamma_t, n)
        return mix_protocol(n, k, d, b)
    return uniform_protocol(params.tumor, 1.0, b, n, gamma_t)


def _report(params, gamma, th, case, protocol, alternates=()) -> SolutionReport:
    e_t = tumor_effect(params.tumor, protocol)
    return SolutionReport(
        kind="p2",
        case=case,
        n_opt=protocol.n,
        protocol=protocol,
        objective_primary=oar_effect(params, protocol),
        objective_secondary=e_t,
        constraint_active=is_active(e_t, gamma),
        gamma=gamma,
        thresholds=th,
        alternates=tuple(alternates),
    )


def solve_p2(
    params: ProblemParams,
    gamma_t: float,
    n_cap: int | None = None,
    max_alternates: int = MAX_ALTERNATES,
) -> SolutionReport:
    """Resolve the palliative problem over all fraction counts.

    Always feasible: enough ``d_min`` fractions meet any floor.
    """
    th = p2_thresholds(params, gamma_t)
    cap = default_n_cap() if n_cap is None else n_cap
    if th.rho > cap:
        raise CapExceeded(f"rho_T={th.rho:.6g} exceeds the fraction cap {cap}")
    b = params.bounds
    lam, rho = th.lam, th.rho

    if near_int(rho) and round(rho) == 1:
        return _report(params, gamma_t, th, P2Case.SINGLE_MIN_FORCED, Protocol.uniform(1, b.d_min, b))

    lo, hi = active_window(lam, rho)
    n_all_min = ceil_tol(rho)
    if lo > hi:
        # only all-d_min protocols with N >= rho meet the floor
        case = P2Case.ALL_MIN_FORCED if lo == floor_tol(rho) else P2Case.EMPTY_WINDOW_ALL_MIN
        return _report(params, gamma_t, th, case, Protocol.uniform(n_all_min, b.d_min, b))

    sign = omega_sign(params)
    if sign < 0:
        k, d = boundary_mix(params.tumor, 1.0, b, gamma_t, lo)
        return _report(params, gamma_t, th, P2Case.HYPO_STRUCTURE, mix_protocol(lo, k, d, b))
    if sign == 0:
        rep = uniform_protocol(params.tumor, 1.0, b, lo, gamma_t)
        alts = [
            (n, uniform_protocol(params.tumor, 1.0, b, n, gamma_t))
            for n in range(lo + 1, floor_tol(rho) + 1)
        ][:max_alternates]
        return _report(params, gamma_t, th, P2Case.OMEGA_ZERO_FAMILY, rep, alts)

    if near_int(rho):
        return _report(
            params, gamma_t, th, P2Case.HYPER_ALL_MIN_INTEGER,
            Protocol.uniform(int(round(rho)), b.d_min, b),
        )
    candidates = [
        uniform_protocol(params.tumor, 1.0, b, hi, gamma_t),
        Protocol.uniform(n_all_min, b.d_min, b),
    ]
    scored = sorted(((oar_effect(params, p), p) for p in candidates), key=lambda t: (t[0], t[1].n))
    best_e, best = scored[0]
    other_e, other = scored[1]
    alts = []
    if abs(other_e - best_e) <= TIE_RTOL * max(1.0, abs(best_e)):
        if other.n < best.n:
            best, other = other, best
        alts.append((other.n, other))
    return _report(params, gamma_t, th, P2Case.HYPER_COMPARED, best, alts)
