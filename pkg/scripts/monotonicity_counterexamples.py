"""Search for instances where the optimal fraction count moves when only the
non-governing tissue changes, and certify each hit with the grid oracle.

The hyper regime of the OAR-minimisation problem compares floor(rho_T)
uniform doses with ceil(rho_T) minimal doses by OAR effect, so the OAR
parameters can tip it.  The hypo regime of the tumour-maximisation problem
makes the symmetric comparison by tumour effect.

    python3 scripts/monotonicity_counterexamples.py --tries 2000 --seed 3
"""

from __future__ import annotations

import argparse
import math

import numpy as np

from fraxion import DoseBounds, ProblemParams, Radiosensitivity, phi, solve_p1, solve_p2
from fraxion.oracle import OracleConfig, OracleProblem, oracle_solve
from fraxion.radiobiology import omega_sign


def scaled(p: ProblemParams, side: str, f: float) -> ProblemParams:
    if side == "tumour":
        return ProblemParams(Radiosensitivity(p.tumor.alpha * f, p.tumor.beta), p.oar, p.delta, p.bounds)
    return ProblemParams(p.tumor, Radiosensitivity(p.oar.alpha * f, p.oar.beta), p.delta, p.bounds)


def certify(prob: OracleProblem, n_hi: int, step: float) -> int:
    cfg = OracleConfig(step, n_range=(1, n_hi), max_exhaustive_n=max(4, n_hi), complete_last=True)
    return oracle_solve(prob, cfg).best_n


def main(argv: list[str] | None = None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--tries", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--factor", type=float, default=0.9)
    ap.add_argument("--limit", type=int, default=3, help="stop after this many certified hits per kind")
    args = ap.parse_args(argv)
    rng = np.random.default_rng(args.seed)
    hits = {"p1": 0, "p2": 0}
    for _ in range(args.tries):
        if min(hits.values()) >= args.limit:
            break
        ta, oa = rng.uniform(0.02, 0.5), rng.uniform(0.02, 0.5)
        d_min = rng.uniform(0.5, 2.0)
        p = ProblemParams(
            Radiosensitivity(ta, ta / rng.uniform(1, 20)),
            Radiosensitivity(oa, oa / rng.uniform(1, 20)),
            rng.uniform(0.1, 1.0),
            DoseBounds(d_min, d_min + rng.uniform(0.2, 5.0)),
        )
        s = omega_sign(p)
        if s < 0 and hits["p1"] < args.limit:
            kind, side = "p1", "tumour"
            gamma = rng.uniform(1.5, 3.9) * phi(p.oar, p.delta, p.d_max)
            solve, make = solve_p1, OracleProblem.p1
            n_hi = math.floor(gamma / phi(p.oar, p.delta, p.d_min))
        elif s > 0 and hits["p2"] < args.limit:
            kind, side = "p2", "OAR"
            gamma = rng.uniform(1.05, 3.95) * phi(p.tumor, 1.0, p.d_min)
            solve, make = solve_p2, OracleProblem.p2
            n_hi = math.ceil(gamma / phi(p.tumor, 1.0, p.d_min))
        else:
            continue
        q = scaled(p, side, args.factor)
        if omega_sign(q) != s or n_hi > 4:
            continue
        try:
            a, b = solve(p, gamma).n_opt, solve(q, gamma).n_opt
        except Exception:
            continue
        if a == b:
            continue
        step = (p.d_max - p.d_min) / 400
        oa_, ob_ = certify(make(p, gamma), n_hi, step), certify(make(q, gamma), n_hi, step)
        status = "certified" if (oa_, ob_) == (a, b) else f"oracle disagrees ({oa_}, {ob_})"
        hits[kind] += status == "certified"
        print(f"{kind} {side} alpha x{args.factor}: N {a} -> {b}  [{status}]")
        print(f"    {p!r}  gamma={gamma!r}")
    print(f"certified hits: {hits}")


if __name__ == "__main__":
    main()
