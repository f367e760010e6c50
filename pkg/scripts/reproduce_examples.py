"""Print the worked examples: fraction counts, protocols and effects.

    python3 scripts/reproduce_examples.py
"""

from __future__ import annotations

from fraxion import (
    DoseBounds,
    ProblemParams,
    Radiosensitivity,
    bed_uniform,
    oar_effect,
    solve_p1,
    solve_p1_fixed,
    solve_p2,
    solve_p2_fixed,
    tumor_effect,
)

TUMOR = Radiosensitivity(0.05, 0.005)
OAR = Radiosensitivity(0.04, 0.02)
BOUNDS = DoseBounds(1.0, 6.0)


def params(delta: float, tumor: Radiosensitivity = TUMOR, oar: Radiosensitivity = OAR) -> ProblemParams:
    return ProblemParams(tumor, oar, delta, BOUNDS)


def show(label: str, p: ProblemParams, rep) -> None:
    print(f"{label:<34} N={rep.n_opt:<3} {rep.case.value:<20} {rep.protocol.render()}")
    print(f"{'':<34} E_T={tumor_effect(p.tumor, rep.protocol):.4f}  E_OAR={oar_effect(p, rep.protocol):.4f}")


def main() -> None:
    print("-- maximise tumour effect under an OAR budget")
    for delta, gamma in ((0.3, 0.78), (0.3, 0.1), (0.1, 0.22)):
        p = params(delta)
        show(f"delta={delta} gamma={gamma}", p, solve_p1(p, gamma))
    flip = params(1.0, Radiosensitivity(0.08, 0.02), Radiosensitivity(0.01, 0.001))
    for gamma in (0.961, 0.971):
        show(f"flip gamma={gamma}", flip, solve_p1(flip, gamma))
    for n in (7, 9):
        prot = solve_p1_fixed(params(0.1), 0.22, n)
        print(f"{'fixed N=' + str(n):<34} {prot.render()}  E_T={tumor_effect(TUMOR, prot):.4f}")

    print("-- minimise OAR effect for a tumour target")
    for delta, gamma in ((1.0, 4.0), (1.0, 4.014), (0.1, 4.35), (0.1, 4.375)):
        p = params(delta)
        show(f"delta={delta} gamma={gamma}", p, solve_p2(p, gamma))
    prot = solve_p2_fixed(params(0.1), 4.35, 11)
    print(f"{'fixed N=11':<34} {prot.render()}  E_OAR={oar_effect(params(0.1), prot):.4f}")

    print("-- uniform conversion of 25 x 2 Gy")
    for m in (15, 50):
        print(f"{m} fractions: {bed_uniform(TUMOR, 25, 2.0, m):.5f} Gy")


if __name__ == "__main__":
    main()
