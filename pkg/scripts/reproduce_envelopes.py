"""Rebuild the reference barrier envelopes and print their level quadruples.

The lower table uses the intercept hull of the two-species Lotka-Volterra
kinetics sigma = (1, 1), C = [[1, 2], [3, 1]], whose floor intercepts are
(1/3, 1/2).  The upper table caps the unit hull (1, 1) under four weight
and diffusion settings.  With --curve-dir the script also dumps one CSV of
plottable barrier curves per envelope through the command-line layer, so
the files match `nbarrier barrier --curve-csv` output byte for byte.
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path

from nbarrier.barrier import build_lower_barrier, build_upper_barrier
from nbarrier.cli import main as cli_main

LOWER_CASES = (
    ((1.0, 2.0), (3.0, 4.0)),
    ((1.0, 1.0), (3.0, 4.0)),
)
UPPER_CASES = (
    ((1.0, 2.0), (3.0, 4.0)),
    ((1.0, 1.0), (3.0, 4.0)),
    ((1.0, 0.5), (3.0, 4.0)),
    ((1.0, 0.75), (3.0, 2.0)),
)
ULOW = (1 / 3, 1 / 2)
UBAR = (1.0, 1.0)
M = 2.0

LV_SPEC = {
    "n": 2, "m": M, "d": None, "l": [1, 1], "theta": 0.0,
    "sigma": [1.0, 1.0], "C": [[1.0, 2.0], [3.0, 1.0]],
}


def _row(alpha, d, env) -> str:
    cells = [f"{env.lambda1:.12g}", f"{env.eta1:.12g}",
             f"{env.lambda2:.12g}", f"{env.eta2:.12g}"]
    return (f"  alpha={alpha!r:14} d={d!r:12} "
            + "  ".join(f"{c:>16}" for c in cells))


def _dump_curves(orientation: str, alpha, d, out_dir: Path, samples: int) -> Path:
    spec = dict(LV_SPEC, d=list(d))
    name = (orientation + "_a" + "-".join(f"{a:g}" for a in alpha)
            + "_d" + "-".join(f"{v:g}" for v in d) + ".csv")
    path = out_dir / name
    code = cli_main([
        "barrier", json.dumps(spec),
        "--alpha", ",".join(repr(a) for a in alpha),
        "--orientation", orientation,
        "--samples", str(samples),
        "--curve-csv", str(path),
        "--out", str(out_dir / (name[:-4] + ".json")),
    ])
    if code != 0:
        raise RuntimeError(f"curve dump failed for {name} (exit {code})")
    return path


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--curve-dir", type=Path,
                    help="also write per-envelope curve CSVs here")
    ap.add_argument("--samples", type=int, default=200,
                    help="curve resolution (default 200)")
    args = ap.parse_args()

    header = "  ".join(f"{h:>16}" for h in ("lambda1", "eta1", "lambda2", "eta2"))
    print("lower envelopes on floor hull", ULOW)
    print(" " * 44 + header)
    for alpha, d in LOWER_CASES:
        print(_row(alpha, d, build_lower_barrier(alpha, d, ULOW, M)))
    print()
    print("upper envelopes on cap hull", UBAR)
    print(" " * 44 + header)
    for alpha, d in UPPER_CASES:
        print(_row(alpha, d, build_upper_barrier(alpha, d, UBAR, M)))

    if args.curve_dir is not None:
        args.curve_dir.mkdir(parents=True, exist_ok=True)
        written = []
        for alpha, d in LOWER_CASES:
            written.append(_dump_curves("lower", alpha, d, args.curve_dir,
                                        args.samples))
        for alpha, d in UPPER_CASES:
            written.append(_dump_curves("upper", alpha, d, args.curve_dir,
                                        args.samples))
        print()
        print(f"wrote {len(written)} curve files under {args.curve_dir}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
