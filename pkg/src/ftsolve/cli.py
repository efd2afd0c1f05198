"""Command-line front end.

Reads a JSON instance file, runs the requested solver, and prints either
human-readable lines or (with --json) a machine-readable object.  The sweep
subcommand emits a CSV table over a range of weight ratios.  All numbers are
printed with 9 significant digits.

Exit codes: 0 success, 1 input parse/schema error, 2 solver failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import __version__
from .analytic import complementary_axial, ft_axial, quartic_coefficients, solve_symmetric
from .angles import angles_at
from .equilibrium import classify
from .errors import FtSolveError
from .geom_core import SymmetricInstance, WeightedTetrahedron
from .numeric import SolverConfig, stationarity_defect, weiszfeld
from .plasticity import (
    PlasticityInstance,
    dihedral_alpha,
    height_012,
    measure_dihedral_data,
    predict_a04p,
    stretch,
    verify_invariance,
)
from .quartic import real_roots

EXIT_INPUT = 1
EXIT_SOLVER = 2


def fmt(x: float) -> str:
    """9 significant digits."""
    return f"{x:.9g}"


class InputError(Exception):
    pass


def load_instance(path: str):
    """Parse and validate an instance file.

    Returns ("symmetric-regular", SymmetricInstance) or
    ("general", WeightedTetrahedron).
    """
    try:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise InputError(f"invalid JSON in {path}: {e}") from e
    if not isinstance(data, dict) or "mode" not in data:
        raise InputError("instance file must be an object with a 'mode' field")
    mode = data["mode"]
    if mode == "symmetric-regular":
        try:
            inst = SymmetricInstance(
                a=float(data["a"]), b1=float(data["b1"]), b4=float(data["b4"])
            )
        except (KeyError, TypeError, ValueError, FtSolveError) as e:
            raise InputError(f"bad symmetric-regular instance: {e}") from e
        return mode, inst
    if mode == "general":
        try:
            tet = WeightedTetrahedron(
                np.asarray(data["vertices"], dtype=float),
                np.asarray(data["weights"], dtype=float),
            )
        except (KeyError, TypeError, ValueError, FtSolveError) as e:
            raise InputError(f"bad general instance: {e}") from e
        return mode, tet
    raise InputError(f"unknown mode {mode!r}")


def require_symmetric(mode, inst) -> SymmetricInstance:
    if mode != "symmetric-regular":
        raise InputError("this subcommand requires a symmetric-regular instance")
    return inst


def emit(payload: dict, as_json: bool):
    if as_json:
        print(json.dumps(payload))
        return
    for key, value in payload.items():
        if isinstance(value, float):
            value = fmt(value)
        elif isinstance(value, (list, tuple)):
            value = " ".join(fmt(v) if isinstance(v, float) else str(v) for v in value)
        print(f"{key}={value}")


def cmd_solve(args) -> int:
    mode, inst = load_instance(args.input)
    if mode == "symmetric-regular":
        sol = solve_symmetric(inst)
    else:
        sol = weiszfeld(inst, SolverConfig(tol=args.tol))
    payload = {
        "case": sol.case,
        "point": [float(v) for v in sol.point],
        "objective": sol.objective,
        "residual": sol.residual,
    }
    if sol.y is not None:
        payload["y"] = sol.y
    if sol.vertex is not None:
        payload["vertex"] = sol.vertex
    emit(payload, args.json)
    return 0


def cmd_classify(args) -> int:
    mode, inst = load_instance(args.input)
    tet = inst.tetrahedron() if mode == "symmetric-regular" else inst
    label = classify(tet)
    payload = {
        "case": label.case,
        "margins": [float(m) for m in label.margins],
    }
    if label.vertex is not None:
        payload["vertex"] = label.vertex
    emit(payload, args.json)
    return 0


def cmd_angles(args) -> int:
    inst = require_symmetric(*load_instance(args.input))
    y = ft_axial(inst)
    aset = angles_at(inst.a, y)
    deg = 180.0 / math.pi
    payload = {
        "y": y,
        "alpha102_rad": aset.alpha_102,
        "alpha304_rad": aset.alpha_304,
        "alpha_cross_rad": aset.alpha_cross,
        "alpha102_deg": aset.alpha_102 * deg,
        "alpha304_deg": aset.alpha_304 * deg,
        "alpha_cross_deg": aset.alpha_cross * deg,
    }
    emit(payload, args.json)
    return 0


def cmd_complementary(args) -> int:
    inst = require_symmetric(*load_instance(args.input))
    yp = complementary_axial(inst)
    defect = stationarity_defect(inst, yp) if inst.b1 > inst.b4 else float("nan")
    emit({"y_complementary": yp, "stationarity_defect": defect}, args.json)
    return 0


def cmd_quartic(args) -> int:
    inst = require_symmetric(*load_instance(args.input))
    q = quartic_coefficients(inst)
    rr = real_roots(q)
    payload = {
        "coefficients": [q.c4, q.c3, q.c2, q.c1, q.c0],
        "roots": [float(r) for r in rr.roots],
        "multiplicities": list(rr.multiplicities),
    }
    emit(payload, args.json)
    return 0


def cmd_plasticity(args) -> int:
    inst = require_symmetric(*load_instance(args.input))
    try:
        lambdas = [float(v) for v in args.lam.split(",")]
        if len(lambdas) != 4:
            raise ValueError
    except ValueError:
        raise InputError("--lambda expects four comma-separated positive numbers")
    sol = solve_symmetric(inst)
    if sol.case != "floating":
        raise FtSolveError("plasticity requires a floating base instance")
    pinst = PlasticityInstance(inst.tetrahedron(), sol.point, np.array(lambdas))
    stretched = stretch(pinst)
    v = stretched.vertices
    d = measure_dihedral_data(sol.point, v[0], v[1], v[2], v[3])
    h = height_012(
        float(np.linalg.norm(sol.point - v[0])),
        d.a02,
        d.a12,
    )
    alpha = dihedral_alpha(d, h)
    predicted = predict_a04p(d, h, alpha)
    displacement = verify_invariance(pinst)
    payload = {
        "stretched_vertices": [[float(x) for x in row] for row in v],
        "predicted_a04p": predicted,
        "displacement": displacement,
    }
    emit(payload, args.json)
    return 0


def cmd_sweep(args) -> int:
    inst = require_symmetric(*load_instance(args.input))
    if args.steps < 1:
        raise InputError("--steps must be at least 1")
    if args.ratio_max < args.ratio_min or args.ratio_min <= 0:
        raise InputError("need 0 < ratio-min <= ratio-max")
    ratios = np.linspace(args.ratio_min, args.ratio_max, args.steps)
    sys.stdout.write("ratio,y,y_complementary,objective,alpha102,alpha304,alpha_cross\n")
    for r in ratios:
        row = SymmetricInstance(inst.a, r * inst.b4, inst.b4)
        y = ft_axial(row)
        try:
            yp = complementary_axial(row)
        except FtSolveError:
            yp = float("nan")
        sol = solve_symmetric(row)
        aset = angles_at(row.a, y)
        cells = [r, y, yp, sol.objective, aset.alpha_102, aset.alpha_304, aset.alpha_cross]
        sys.stdout.write(",".join(fmt(float(v)) for v in cells) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ftsolve",
        description="Weighted Fermat-Torricelli solvers for regular tetrahedra",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--input", required=True, help="instance file (JSON)")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--tol", type=float, default=1e-12, help="solver tolerance")

    p = sub.add_parser("solve", help="solve for the weighted minimizer")
    common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("classify", help="floating/absorbed classification")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("angles", help="vertex angles at the minimizer")
    common(p)
    p.set_defaults(func=cmd_angles)

    p = sub.add_parser("complementary", help="signed-weight exterior critical point")
    common(p)
    p.set_defaults(func=cmd_complementary)

    p = sub.add_parser("quartic", help="stationarity quartic and its real roots")
    common(p)
    p.set_defaults(func=cmd_quartic)

    p = sub.add_parser("plasticity", help="ray-stretch construction and invariance")
    common(p)
    p.add_argument(
        "--lambda",
        dest="lam",
        required=True,
        help="four comma-separated stretch factors l1,l2,l3,l4",
    )
    p.set_defaults(func=cmd_plasticity)

    p = sub.add_parser("sweep", help="CSV table over a range of weight ratios")
    common(p)
    p.add_argument("--ratio-min", type=float, required=True)
    p.add_argument("--ratio-max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except FtSolveError as e:
        print(f"solver error: {e}", file=sys.stderr)
        return EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())
