"""Regenerate the CLI golden files under tests/golden/.

Run after an intentional output change, then review the diff:

    python scripts/make_golden.py
"""

from __future__ import annotations

import io
import json
from pathlib import Path

from fraxion.cli import main

ROOT = Path(__file__).resolve().parents[1]
FIX = ROOT / "tests" / "fixtures"
GOLD = ROOT / "tests" / "golden"

SOLVE = [
    "p1_hyper", "p1_hypo", "p1_flip_low", "p1_flip_high", "p1_2d", "p1_shrunk",
    "p2_hyper", "p2_allmin", "p2_hypo", "p2_hypo_integer", "p2_gap", "p2_window_one",
    "p3_equivalent",
]
VERIFY = ["p1_hyper", "p1_2d", "p1_shrunk", "p2_gap", "p2_window_one"]
BED = ["bed_15", "bed_50", "bed_identity"]
SWEEPS = {
    "sweep_p1_gamma": ("p1_hyper", ["--sweep-param", "gamma", "--start", "0.1", "--stop", "0.78", "--steps", "10"]),
    "sweep_p1_delta": ("p1_hyper", ["--sweep-param", "delta", "--start", "0.1", "--stop", "0.3", "--steps", "5"]),
    "sweep_p2_gamma": ("p2_hypo", ["--sweep-param", "gamma", "--start", "4.3", "--stop", "4.4", "--steps", "5"]),
}


def run(argv: list[str]) -> tuple[int, str]:
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out=out, err=err)
    return code, out.getvalue()


def cases():
    """Yield (golden name, argv, expected exit code)."""
    for name in SOLVE:
        yield f"solve_{name}", ["solve", "--input", str(FIX / f"{name}.json"), "--format", "machine"], 0
    for name in VERIFY:
        yield f"verify_{name}", ["verify", "--input", str(FIX / f"{name}.json"), "--format", "machine"], 0
    yield "verify_tampered", ["verify", "--input", str(FIX / "p1_shrunk.json"), "--format", "machine",
                              "--report", str(FIX / "p1_shrunk_tampered_report.json")], 3
    for name in BED:
        yield f"bed_{name}", ["bed", "--input", str(FIX / f"{name}.json"), "--format", "machine"], 0
    for gold, (name, extra) in SWEEPS.items():
        yield gold, ["sweep", "--input", str(FIX / f"{name}.json"), "--format", "machine", *extra], 0


def write_tampered_report() -> None:
    """A correct report for p1_shrunk with every dose cut by 1%."""
    code, text = run(["solve", "--input", str(FIX / "p1_shrunk.json"), "--format", "machine", "--precision", "full"])
    assert code == 0
    doc = json.loads(text)
    for g in doc["protocol"]:
        g["dose"] *= 0.99
    (FIX / "p1_shrunk_tampered_report.json").write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def main_() -> None:
    write_tampered_report()
    GOLD.mkdir(exist_ok=True)
    for name, argv, want in cases():
        code, text = run(argv)
        if code != want:
            raise SystemExit(f"{name}: exit {code}, expected {want}")
        suffix = ".csv" if name.startswith("sweep") else ".json"
        (GOLD / f"{name}{suffix}").write_text(text)
        print(f"wrote {name}{suffix}")


if __name__ == "__main__":
    main_()
