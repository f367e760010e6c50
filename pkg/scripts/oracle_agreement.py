"""Cross-check the analytic solvers against the grid oracle on random instances.

For each instance the oracle runs at two grid steps.  The script prints
how often the analytic optimum sits inside the oracle's error bar and
how fast the grid gap shrinks as the step is refined.

    python3 scripts/oracle_agreement.py --instances 100 --seed 1
"""

from __future__ import annotations

import argparse
import math
import time

import numpy as np

from fraxion import DoseBounds, ProblemParams, Radiosensitivity, phi, solve_p1, solve_p2
from fraxion.oracle import OracleConfig, OracleProblem, check_against_oracle


def instance(rng: np.random.Generator, kind: str, span: tuple[float, float]):
    tumor = Radiosensitivity(rng.uniform(0.02, 0.5), rng.uniform(0.002, 0.1))
    oar = Radiosensitivity(rng.uniform(0.02, 0.5), rng.uniform(0.002, 0.1))
    d_min = rng.uniform(0.5, 3.0)
    p = ProblemParams(tumor, oar, rng.uniform(0.1, 1.0), DoseBounds(d_min, d_min + rng.uniform(*span)))
    if kind == "p1":
        gamma = rng.uniform(1.05, 4.95) * phi(oar, p.delta, d_min)
        return OracleProblem.p1(p, gamma), solve_p1(p, gamma)
    gamma = rng.uniform(1.05, 3.95) * phi(tumor, 1.0, d_min)
    return OracleProblem.p2(p, gamma), solve_p2(p, gamma)


def main(argv: list[str] | None = None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--instances", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--coarse", type=float, default=1e-2)
    ap.add_argument("--fine", type=float, default=1e-3)
    ap.add_argument("--span", type=float, nargs=2, default=(0.2, 0.5), metavar=("LO", "HI"))
    args = ap.parse_args(argv)
    rng = np.random.default_rng(args.seed)
    print("kind  agree  nonzero-gap  median-shrink  p10-shrink  seconds")
    for kind in ("p1", "p2"):
        t = time.perf_counter()
        agree, ratios = 0, []
        for _ in range(args.instances):
            prob, rep = instance(rng, kind, tuple(args.span))
            gaps, ok_all = [], True
            for h in (args.coarse, args.fine):
                res, ok, _ = check_against_oracle(prob, rep.objective_primary, rep.n_opt,
                                                  OracleConfig(h, n_range=(1, 4)))
                ok_all &= ok
                gaps.append(res.gap_vs_analytic)
            agree += ok_all
            if gaps[0] > 1e-12:
                ratios.append(gaps[0] / gaps[1] if gaps[1] > 0 else math.inf)
        r = np.array(ratios) if ratios else np.array([math.nan])
        print(f"{kind:<5} {agree:>3}/{args.instances:<3} {len(ratios):>11}  {np.median(r):>13.2f}"
              f"  {np.percentile(r, 10):>10.2f}  {time.perf_counter() - t:>7.1f}")


if __name__ == "__main__":
    main()
