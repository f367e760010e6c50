"""Linear-quadratic (LQ) model arithmetic.

Effects are the negative log of the accumulated survival fraction: a
protocol of doses ``d_1..d_N`` acting on a tissue with radiosensitivity
``(alpha, beta)`` has effect ``alpha*sum(d) + beta*sum(d**2)``.  Healthy
tissue next to the tumour (the OAR) sees the spared dose ``delta*d``.
"""

from __future__ import annotations

import math
from dataclasses import InitVar, dataclass
from typing import Iterable

from fraxion.errors import ValidationError

# Relative tolerance used to decide that a threshold or a count sits on an
# integer.  Exact integrality is measure-zero in floating point.
INT_RTOL = 1e-9


def check_positive(name: str, value: float) -> float:
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise ValidationError(f"{name} must be a number, got {value!r}") from None
    if not math.isfinite(value):
        raise ValidationError(f"{name} must be finite, got {value!r}")
    if value <= 0:
        raise ValidationError(f"{name} must be > 0, got {value!r}")
    return value


@dataclass(frozen=True)
class Radiosensitivity:
    """LQ parameters of one tissue: ``alpha`` in 1/Gy, ``beta`` in 1/Gy^2."""

    alpha: float
    beta: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", check_positive("alpha", self.alpha))
        object.__setattr__(self, "beta", check_positive("beta", self.beta))

    @property
    def ratio(self) -> float:
        """The alpha/beta ratio in Gy."""
        return self.alpha / self.beta


@dataclass(frozen=True)
class DoseBounds:
    d_min: float
    d_max: float

    def __post_init__(self) -> None:
        lo = check_positive("d_min", self.d_min)
        hi = check_positive("d_max", self.d_max)
        if not lo < hi:
            raise ValidationError(f"need d_min < d_max, got [{lo}, {hi}]")
        object.__setattr__(self, "d_min", lo)
        object.__setattr__(self, "d_max", hi)

    def contains(self, dose: float, tol: float = 0.0) -> bool:
        return self.d_min - tol <= dose <= self.d_max + tol


@dataclass(frozen=True)
class ProblemParams:
    """Tumour and OAR sensitivities, sparing factor and per-fraction bounds."""

    tumor: Radiosensitivity
    oar: Radiosensitivity
    delta: float
    bounds: DoseBounds

    def __post_init__(self) -> None:
        delta = check_positive("delta", self.delta)
        if delta > 1:
            raise ValidationError(f"delta must lie in (0, 1], got {delta}")
        object.__setattr__(self, "delta", delta)
        if not isinstance(self.tumor, Radiosensitivity) or not isinstance(self.oar, Radiosensitivity):
            raise ValidationError("tumor and oar must be Radiosensitivity instances")
        if not isinstance(self.bounds, DoseBounds):
            raise ValidationError("bounds must be a DoseBounds instance")

    @property
    def d_min(self) -> float:
        return self.bounds.d_min

    @property
    def d_max(self) -> float:
        return self.bounds.d_max


@dataclass(frozen=True)
class Protocol:
    """A dose schedule stored as run-length groups ``(count, dose)``.

    Groups are canonicalised on construction: sorted by dose, equal doses
    merged.  Passing ``bounds`` additionally checks every dose against them.
    """

    groups: tuple[tuple[int, float], ...]
    bounds: InitVar[DoseBounds | None] = None

    def __post_init__(self, bounds: DoseBounds | None) -> None:
        merged: dict[float, int] = {}
        for count, dose in self.groups:
            if isinstance(count, bool) or int(count) != count or count < 1:
                raise ValidationError(f"group counts must be positive integers, got {count!r}")
            dose = float(dose)
            if not math.isfinite(dose) or dose <= 0:
                raise ValidationError(f"doses must be finite and > 0, got {dose!r}")
            merged[dose] = merged.get(dose, 0) + int(count)
        if not merged:
            raise ValidationError("a protocol needs at least one fraction")
        canon = tuple((merged[d], d) for d in sorted(merged))
        object.__setattr__(self, "groups", canon)
        if bounds is not None:
            for _, dose in canon:
                if not bounds.contains(dose):
                    raise ValidationError(
                        f"dose {dose!r} Gy outside [{bounds.d_min}, {bounds.d_max}]"
                    )

    @classmethod
    def uniform(cls, n: int, dose: float, bounds: DoseBounds | None = None) -> Protocol:
        return cls(((n, dose),), bounds)

    @classmethod
    def from_doses(cls, doses: Iterable[float], bounds: DoseBounds | None = None) -> Protocol:
        return cls(tuple((1, d) for d in doses), bounds)

    @property
    def n(self) -> int:
        return sum(c for c, _ in self.groups)

    @property
    def total_dose(self) -> float:
        return math.fsum(c * d for c, d in self.groups)

    @property
    def doses(self) -> list[float]:
        """Expanded, sorted per-fraction doses.  Length is ``n``."""
        return [d for c, d in self.groups for _ in range(c)]

    def distinct_doses(self) -> list[float]:
        return [d for _, d in self.groups]

    def within(self, bounds: DoseBounds, tol: float = 0.0) -> bool:
        return all(bounds.contains(d, tol) for _, d in self.groups)

    def render(self, digits: int = 3) -> str:
        parts = [f"{c}×{d:.{digits}f}" for c, d in self.groups]
        return " + ".join(parts) + " Gy"

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class Thresholds:
    """Fraction-count thresholds and the regime discriminant.

    ``lam`` and ``rho`` are dimensionless; ``omega`` is in Gy.
    """

    lam: float
    rho: float
    omega: float


def phi(sens: Radiosensitivity, scale: float, r):
    """Per-fraction effect ``alpha*s*r + beta*s^2*r^2``; accepts numpy arrays."""
    return sens.alpha * scale * r + sens.beta * scale * scale * r * r


def _group_effect(sens: Radiosensitivity, scale: float, p: Protocol) -> float:
    return math.fsum(c * phi(sens, scale, d) for c, d in p.groups)


def tumor_effect(sens: Radiosensitivity, p: Protocol) -> float:
    return _group_effect(sens, 1.0, p)


def oar_effect(params: ProblemParams, p: Protocol) -> float:
    return _group_effect(params.oar, params.delta, p)


def survival_fraction(sens: Radiosensitivity, p: Protocol) -> float:
    """Probability that a cell survives the whole protocol."""
    return math.exp(-tumor_effect(sens, p))


def omega(params: ProblemParams) -> float:
    """Regime discriminant: positive favours many small fractions."""
    return params.tumor.ratio - params.oar.alpha / (params.oar.beta * params.delta)


def omega_is_zero(params: ProblemParams) -> bool:
    scale = params.tumor.ratio + params.oar.alpha / (params.oar.beta * params.delta)
    return abs(omega(params)) <= 1e-12 * scale


def omega_sign(params: ProblemParams) -> int:
    if omega_is_zero(params):
        return 0
    return 1 if omega(params) > 0 else -1


def solve_phi(sens: Radiosensitivity, scale: float, target: float) -> float:
    """Non-negative root ``r`` of ``phi(sens, scale, r) == target``.

    Uses the form ``2c/(b + sqrt(b^2 + 4ac))`` which does not cancel when
    ``4ac`` is small next to ``b^2``.
    """
    if target < 0:
        raise ValidationError(f"target effect must be >= 0, got {target}")
    a = sens.beta * scale * scale
    b = sens.alpha * scale
    return 2.0 * target / (b + math.sqrt(b * b + 4.0 * a * target))


def uniform_dose_for_budget(sens: Radiosensitivity, scale: float, n: int, gamma: float) -> float:
    """Dose ``d`` such that ``n`` equal fractions of ``d`` have total effect ``gamma``."""
    if int(n) != n or n < 1:
        raise ValidationError(f"n must be a positive integer, got {n!r}")
    check_positive("gamma", gamma)
    return solve_phi(sens, scale, gamma / n)


def p1_thresholds(params: ProblemParams, gamma_oar: float) -> Thresholds:
    """OAR-budget thresholds; ``rho`` deliberately carries no lower clamp."""
    gamma_oar = check_positive("gamma_oar", gamma_oar)
    lam = max(1.0, gamma_oar / phi(params.oar, params.delta, params.d_max))
    rho = gamma_oar / phi(params.oar, params.delta, params.d_min)
    return Thresholds(lam, rho, omega(params))


def p2_thresholds(params: ProblemParams, gamma_t: float) -> Thresholds:
    gamma_t = check_positive("gamma_t", gamma_t)
    lam, rho = tumor_thresholds(params.tumor, params.bounds, gamma_t)
    return Thresholds(lam, rho, omega(params))


def tumor_thresholds(tumor: Radiosensitivity, bounds: DoseBounds, gamma_t: float) -> tuple[float, float]:
    lam = max(1.0, gamma_t / phi(tumor, 1.0, bounds.d_max))
    rho = max(1.0, gamma_t / phi(tumor, 1.0, bounds.d_min))
    return lam, rho


# -- integer helpers --------------------------------------------------------

def near_int(x: float, rtol: float = INT_RTOL) -> bool:
    return abs(x - round(x)) <= rtol * max(1.0, abs(x))


def floor_tol(x: float) -> int:
    """``floor`` that snaps values within ``INT_RTOL`` of an integer onto it."""
    return int(round(x)) if near_int(x) else math.floor(x)


def ceil_tol(x: float) -> int:
    return int(round(x)) if near_int(x) else math.ceil(x)

