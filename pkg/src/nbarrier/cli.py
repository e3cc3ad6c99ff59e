"""Command-line entry point wiring the library together.

Subcommands: bounds, barrier, verify-h, exact, residual, simulate,
nonexistence.  JSON results go to stdout or --out; CSV side outputs are
written only when requested.  Exit codes: 0 success, 1 domain error,
2 usage error, 3 computation succeeded but a verification check failed.
All output is deterministic; floats use shortest round-trip formatting.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .barrier import (_ellipsoid_points, _face_points, _plane_points,
                      build_lower_barrier, build_upper_barrier)
from .bounds import bounds_general, bounds_m1
from .exact import cos_family, residual, tanh_family
from .model import hull_intercepts, system_from_dict, system_to_dict, verify_hypothesis_H
from .nonexistence import check, params_from_dict
from .waves import check_bounds, integrate

RESIDUAL_TOL = 1e-8


class _Usage(Exception):
    """Bad invocation or malformed input; maps to exit code 2."""


def _load_json(arg: str) -> dict:
    """Accept either a path to a JSON file or an inline JSON object."""
    text = arg
    if not arg.lstrip().startswith("{"):
        try:
            text = Path(arg).read_text()
        except OSError as exc:
            raise _Usage(f"cannot read {arg}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _Usage(f"malformed JSON at line {exc.lineno} column {exc.colno}: "
                     f"{exc.msg}") from exc
    if not isinstance(doc, dict):
        raise _Usage("top-level JSON value must be an object")
    return doc


def _parse_floats(text: str, what: str) -> tuple:
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError as exc:
        raise _Usage(f"{what} must be a comma-separated float list") from exc


def _parse_pair(text: str, what: str) -> tuple:
    parts = text.split(":")
    if len(parts) != 2:
        raise _Usage(f"{what} must look like A:B")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError as exc:
        raise _Usage(f"{what} must contain floats") from exc


def _parse_grid(text: str) -> list:
    parts = text.split(":")
    if len(parts) != 3:
        raise _Usage("grid must look like A:B:H")
    try:
        a, b, h = (float(p) for p in parts)
    except ValueError as exc:
        raise _Usage("grid must contain floats") from exc
    if h <= 0 or b <= a:
        raise _Usage("grid needs B > A and H > 0")
    count = int(round((b - a) / h)) + 1
    return [a + i * h for i in range(count)]


def _emit_json(doc: dict, out: str | None):
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _write_csv(path: str, header: list, rows) -> None:
    with open(path, "w") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(repr(float(v)) for v in row) + "\n")


def _cmd_bounds(args) -> int:
    spec = system_from_dict(_load_json(args.spec))
    alpha = _parse_floats(args.alpha, "--alpha")
    if len(alpha) != spec.n:
        raise ValueError(f"--alpha needs {spec.n} entries, got {len(alpha)}")
    hull = hull_intercepts(spec.reaction)
    if spec.m == 1:
        result = bounds_m1(alpha, spec.d, hull, args.chi)
    else:
        result = bounds_general(alpha, spec.d, hull, spec.m, args.chi)
    _emit_json(result.to_dict(), args.out)
    return 0


def _cmd_barrier(args) -> int:
    spec = system_from_dict(_load_json(args.spec))
    alpha = _parse_floats(args.alpha, "--alpha")
    if len(alpha) != spec.n:
        raise ValueError(f"--alpha needs {spec.n} entries, got {len(alpha)}")
    hull = hull_intercepts(spec.reaction)
    if args.orientation == "lower":
        env = build_lower_barrier(alpha, spec.d, hull.ulow, spec.m)
    else:
        env = build_upper_barrier(alpha, spec.d, hull.ubar, spec.m)
    _emit_json(env.to_dict(), args.out)
    if args.curve_csv:
        n, r = spec.n, args.samples
        named = [
            ("plane_eta1", _plane_points(env.eta1, alpha, n, r)),
            ("plane_eta2", _plane_points(env.eta2, alpha, n, r)),
            ("ellipsoid_lambda1",
             _ellipsoid_points(env.lambda1, alpha, spec.d, spec.m, n, r)),
            ("ellipsoid_lambda2",
             _ellipsoid_points(env.lambda2, alpha, spec.d, spec.m, n, r)),
            ("hull_face",
             _face_points(hull.ulow if args.orientation == "lower" else hull.ubar,
                          n, r)),
        ]
        with open(args.curve_csv, "w") as fh:
            fh.write(",".join(["set"] + [f"u{i + 1}" for i in range(n)]) + "\n")
            for name, points in named:
                for u in points:
                    fh.write(",".join([name] + [repr(float(v)) for v in u]) + "\n")
    return 0


def _cmd_verify_h(args) -> int:
    spec = system_from_dict(_load_json(args.spec))
    hull = hull_intercepts(spec.reaction)
    report = verify_hypothesis_H(spec, hull, args.samples)
    _emit_json({
        "inner_ok": report.inner_ok,
        "outer_ok": report.outer_ok,
        "worst_inner_point": list(report.worst_inner_point),
        "worst_inner_value": report.worst_inner_value,
        "worst_outer_point": list(report.worst_outer_point),
        "worst_outer_value": report.worst_outer_value,
    }, args.out)
    return 0 if report.ok else 3


def _family_from_args(args):
    if args.family == "tanh":
        missing = [name for name in ("c11", "c22")
                   if getattr(args, name) is None]
        if missing:
            raise _Usage("tanh family needs --" + " --".join(missing))
        sol = tanh_family(args.d1, args.d2, args.c11, args.c22)
    else:
        required = ("m1", "m2", "m3", "mu", "d3", "c12", "c13", "c21", "c23",
                    "c31", "c32")
        missing = [name for name in required if getattr(args, name) is None]
        if missing:
            raise _Usage("cos family needs --" + " --".join(missing))
        sol = cos_family(args.m1, args.m2, args.m3, args.mu,
                         args.d1, args.d2, args.d3,
                         args.c12, args.c13, args.c21, args.c23,
                         args.c31, args.c32)
    return sol


def _solution_dict(sol) -> dict:
    doc = {k: float(v) for k, v in vars(sol).items()}
    doc["system"] = system_to_dict(sol.system())
    return doc


def _cmd_exact(args) -> int:
    sol = _family_from_args(args)
    _emit_json(_solution_dict(sol), args.out)
    if args.csv:
        if not args.grid:
            raise _Usage("--csv needs --grid")
        xs = _parse_grid(args.grid)
        profile = sol.profile()
        rows = ([x] + list(profile.at(x).u) for x in xs)
        _write_csv(args.csv, ["x"] + [f"u{i + 1}" for i in range(profile.n)], rows)
    return 0


def _default_residual_grid(args, sol) -> list:
    if args.grid:
        return _parse_grid(args.grid)
    if args.family == "tanh":
        return _parse_grid("-20:20:0.01")
    period = sol.period
    return [i * period / 2000.0 for i in range(2001)]


def _cmd_residual(args) -> int:
    sol = _family_from_args(args)
    spec = system_from_dict(_load_json(args.spec)) if args.spec else sol.system()
    xs = _default_residual_grid(args, sol)
    worst = residual(spec, sol.profile(), xs)
    ok = all(r <= args.tol for r in worst)
    _emit_json({"residuals": list(worst), "tol": args.tol, "ok": ok}, args.out)
    return 0 if ok else 3


def _cmd_simulate(args) -> int:
    spec = system_from_dict(_load_json(args.spec))
    u0 = _parse_floats(args.u0, "--u0")
    w0 = _parse_floats(args.w0, "--w0")
    span = _parse_pair(args.span, "--span")
    alpha = _parse_floats(args.alpha, "--alpha") if args.alpha else None
    traj = integrate(spec, u0, w0, span, args.step, alpha=alpha)
    summary = {
        "points": len(traj.xs),
        "min_p": float(traj.p.min()),
        "max_p": float(traj.p.max()),
        "truncated": traj.truncated,
        "truncation_reason": traj.truncation_reason,
        "clamped": traj.clamped,
    }
    code = 0
    if args.check_bounds:
        hull = hull_intercepts(spec.reaction)
        if spec.m == 1:
            bounds = bounds_m1(traj.alpha, spec.d, hull, args.chi)
        else:
            bounds = bounds_general(traj.alpha, spec.d, hull, spec.m, args.chi)
        report = check_bounds(traj, traj.alpha, bounds)
        summary["bounds"] = bounds.to_dict()
        summary["violations"] = [list(v) for v in report.violations]
        if not report.ok:
            code = 3
    if args.csv:
        n = traj.n
        header = (["x"] + [f"u{i + 1}" for i in range(n)]
                  + [f"w{i + 1}" for i in range(n)] + ["p", "q"])
        rows = ([traj.xs[k]] + list(traj.u[k]) + list(traj.w[k])
                + [traj.p[k], traj.q[k]] for k in range(len(traj.xs)))
        _write_csv(args.csv, header, rows)
    _emit_json(summary, args.out)
    return code


def _cmd_nonexistence(args) -> int:
    params = params_from_dict(_load_json(args.params))
    verdict = check(params)
    _emit_json(verdict.to_dict(), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nbarrier",
        description="Barrier bounds, exact profiles and wave checks for "
                    "degenerate competition systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="closed-form bounds on the weighted total")
    p.add_argument("spec", help="system JSON (path or inline)")
    p.add_argument("--alpha", required=True, help="comma-separated weights")
    p.add_argument("--chi", type=int, choices=(0, 1), default=1,
                   help="boundary characteristic (default 1)")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("barrier", help="build one barrier envelope")
    p.add_argument("spec")
    p.add_argument("--alpha", required=True)
    p.add_argument("--orientation", choices=("lower", "upper"), required=True)
    p.add_argument("--samples", type=int, default=100,
                   help="lattice resolution for --curve-csv")
    p.add_argument("--curve-csv", dest="curve_csv")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_barrier)

    p = sub.add_parser("verify-h", help="sample the sign hypothesis on the hull")
    p.add_argument("spec")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_verify_h)

    for cmd, fn in (("exact", _cmd_exact), ("residual", _cmd_residual)):
        p = sub.add_parser(cmd, help=("solve a closed-form family"
                                      if cmd == "exact"
                                      else "wave-equation residual of a family"))
        p.add_argument("family", choices=("tanh", "cos"))
        p.add_argument("--d1", type=float, required=True)
        p.add_argument("--d2", type=float, required=True)
        p.add_argument("--d3", type=float)
        p.add_argument("--c11", type=float)
        p.add_argument("--c22", type=float)
        p.add_argument("--m1", type=float)
        p.add_argument("--m2", type=float)
        p.add_argument("--m3", type=float)
        p.add_argument("--mu", type=float)
        p.add_argument("--c12", type=float)
        p.add_argument("--c13", type=float)
        p.add_argument("--c21", type=float)
        p.add_argument("--c23", type=float)
        p.add_argument("--c31", type=float)
        p.add_argument("--c32", type=float)
        p.add_argument("--grid", help="A:B:H sample grid")
        if cmd == "exact":
            p.add_argument("--csv", help="write x,u1..un samples here")
        else:
            p.add_argument("--spec", help="check against this system instead "
                                          "of the induced one")
            p.add_argument("--tol", type=float, default=RESIDUAL_TOL)
        p.add_argument("--out")
        p.set_defaults(fn=fn)

    p = sub.add_parser("simulate", help="integrate a trajectory")
    p.add_argument("spec")
    p.add_argument("--u0", required=True)
    p.add_argument("--w0", required=True)
    p.add_argument("--span", required=True, help="A:B")
    p.add_argument("--step", type=float, required=True)
    p.add_argument("--alpha")
    p.add_argument("--csv")
    p.add_argument("--check-bounds", dest="check_bounds", action="store_true")
    p.add_argument("--chi", type=int, choices=(0, 1), default=1)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_simulate)

    p = sub.add_parser("nonexistence", help="three-species wave blocking verdict")
    p.add_argument("params", help="parameter JSON (path or inline)")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_nonexistence)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.fn(args)
    except _Usage as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
