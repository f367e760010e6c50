"""Biologically equivalent treatments.

Two protocols are equivalent for a tumour when their LQ effects agree.
Among all protocols reaching a target effect, the one with the lowest
total dose uses the fewest fractions that can reach it, mostly at
``d_max``: the same boundary structure as the palliative problem when
``omega < 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from fraxion.errors import CapExceeded, ValidationError
from fraxion.p1 import SolutionReport, boundary_mix, default_n_cap, is_active, mix_protocol
from fraxion.p2 import P2Case
from fraxion.radiobiology import (
    DoseBounds,
    Protocol,
    Radiosensitivity,
    Thresholds,
    check_positive,
    ceil_tol,
    floor_tol,
    near_int,
    phi,
    solve_phi,
    tumor_effect,
    tumor_thresholds,
)


@dataclass(frozen=True)
class EquivalenceQuery:
    tumor: Radiosensitivity
    bounds: DoseBounds
    target_effect: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "target_effect", check_positive("target_effect", self.target_effect))


@dataclass(frozen=True)
class BedConversion:
    """Result of a uniform-to-uniform conversion, with an advisory bounds flag."""

    n: int
    dose: float
    n_target: int
    dose_target: float
    effect: float
    effect_target: float
    within_bounds: bool | None


def _report(query: EquivalenceQuery, th: Thresholds, case: P2Case, protocol: Protocol) -> SolutionReport:
    e_t = tumor_effect(query.tumor, protocol)
    return SolutionReport(
        kind="p3",
        case=case,
        n_opt=protocol.n,
        protocol=protocol,
        objective_primary=protocol.total_dose,
        objective_secondary=e_t,
        constraint_active=is_active(e_t, query.target_effect),
        gamma=query.target_effect,
        thresholds=th,
    )


def min_total_dose(query: EquivalenceQuery, n_cap: int | None = None) -> SolutionReport:
    """Protocol reaching ``target_effect`` with the smallest total dose.

    When no bound-respecting protocol hits the target exactly (the target is
    below one ``d_min`` fraction, or no integer count lies between the
    thresholds) the cheapest protocol exceeding it is returned instead.
    """
    gamma = query.target_effect
    b = query.bounds
    lam, rho = tumor_thresholds(query.tumor, b, gamma)
    th = Thresholds(lam, rho, math.nan)
    cap = default_n_cap() if n_cap is None else n_cap
    if rho > cap:
        raise CapExceeded(f"rho_T={rho:.6g} exceeds the fraction cap {cap}")
    if near_int(rho) and round(rho) == 1:
        return _report(query, th, P2Case.SINGLE_MIN_FORCED, Protocol.uniform(1, b.d_min, b))
    n = ceil_tol(lam)
    if n > floor_tol(rho):
        return _report(query, th, P2Case.EMPTY_WINDOW_ALL_MIN, Protocol.uniform(ceil_tol(rho), b.d_min, b))
    k, d = boundary_mix(query.tumor, 1.0, b, gamma, n)
    return _report(query, th, P2Case.HYPO_STRUCTURE, mix_protocol(n, k, d, b))


def _check_count(name: str, n) -> int:
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ValidationError(f"{name} must be a positive integer, got {n!r}")
    return int(n)


def bed_uniform(tumor: Radiosensitivity, n: int, d: float, n_target: int) -> float:
    """Dose per fraction giving ``n_target`` fractions the effect of ``n`` x ``d``."""
    n = _check_count("n", n)
    n_target = _check_count("n_target", n_target)
    d = check_positive("d", d)
    if n == n_target:
        return d
    return solve_phi(tumor, 1.0, n * phi(tumor, 1.0, d) / n_target)


def convert_bed(
    tumor: Radiosensitivity, n: int, d: float, n_target: int, bounds: DoseBounds | None = None
) -> BedConversion:
    """:func:`bed_uniform` plus both effects; bounds only set a flag, never reject."""
    d_new = bed_uniform(tumor, n, d, n_target)
    return BedConversion(
        n=int(n),
        dose=float(d),
        n_target=int(n_target),
        dose_target=d_new,
        effect=tumor_effect(tumor, Protocol.uniform(n, d)),
        effect_target=tumor_effect(tumor, Protocol.uniform(n_target, d_new)),
        within_bounds=None if bounds is None else bounds.contains(d_new),
    )


def effects_equal(tumor: Radiosensitivity, p: Protocol, q: Protocol, tol: float) -> bool:
    tol = check_positive("tol", tol)
    ep = tumor_effect(tumor, p)
    return abs(ep - tumor_effect(tumor, q)) <= tol * max(1.0, ep)
