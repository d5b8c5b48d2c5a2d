"""Command-line surface: every computation in the package behind one
executable, with JSON reports on stdout and SVG/CSV artifact output.

Conventions: complex flags accept "re+imi" literals (1, -0.3-0.4i, 2i);
angle flags accept a "pi" suffix (0.25pi).  Exit code 0 on success, 2 on
a violated precondition, 3 on a numerical failure.  The default seed
comes from the JANOWSKI_SEED environment variable.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .envelope import (
    alpha_nesting,
    critical_points,
    envelope_bounds,
    eval_powered,
    sample_curve,
    sector_image,
    tilt_angle,
)
from .errors import NumericalError, ParameterError
from .moebius import JanowskiParams, canonicalize, contains, image_disk, origin_position
from .oracle import THEOREM_IDS, _jsonable, empirical_bounds, implication_trial
from .radii import (
    INCLUSION_ORIENTATION_NOTE,
    RadiusProblem,
    alpha_star,
    class_inclusion,
    reciprocal_radius,
    starlike_radius,
    subordination_radius,
    uralegaddi_radius,
)
from .sectors import (
    derivative_sector_params,
    double_subordination_tilt,
    eta_infimum,
    ratio_sector_params,
    reciprocal_order_sector,
    weighted_sector_params,
)
from .special import (
    DominantSpec,
    best_dominant,
    hyper_3f2,
    kernel_integral,
    macgregor_gamma,
    operator_dominant,
    silverman_inclusion,
)

__all__ = ["main", "parse_complex", "parse_angle"]


def parse_complex(text: str) -> complex:
    """Parse "re+imi" literals: 1, -0.5, 2i, 0.3-0.4i, 1e-3+2e-2i."""
    norm = text.strip().replace(" ", "").replace("I", "i").replace("j", "i")
    norm = norm.replace("i", "j")
    try:
        return complex(norm)
    except ValueError:
        raise ParameterError(f"cannot parse complex literal {text!r}") from None


def parse_angle(text: str) -> float:
    """Parse an angle in radians; a trailing "pi" multiplies by pi."""
    norm = text.strip().lower().replace(" ", "")
    factor = 1.0
    if norm.endswith("pi"):
        factor = math.pi
        norm = norm[:-2] or "1"
        if norm in ("-", "+"):
            norm += "1"
    try:
        return float(norm) * factor
    except ValueError:
        raise ParameterError(f"cannot parse angle literal {text!r}") from None


def _real(value: complex, name: str) -> float:
    if abs(value.imag) > 1e-12:
        raise ParameterError(f"--{name} must be real for this action, got {value}")
    return float(value.real)


def _need(args, names: tuple[str, ...], action: str) -> None:
    missing = [n for n in names if getattr(args, n.replace("-", "_"), None) is None]
    if missing:
        flags = ", ".join("--" + n for n in missing)
        raise ParameterError(f"action {action!r} requires {flags}")


def _asdict(obj) -> dict:
    return dataclasses.asdict(obj)


# ---------------------------------------------------------------------------
# command handlers


def _cmd_geometry(args):
    act = args.action
    if act == "image-disk":
        _need(args, ("A", "B"), act)
        p = JanowskiParams(args.A, args.B)
        geo = image_disk(p, args.r)
        result = _asdict(geo)
        oracle = None
        if args.verify and geo.kind == "disk":
            t = np.linspace(0.0, 2.0 * np.pi, 2048, endpoint=False)
            w = (1.0 + args.A * args.r * np.exp(1j * t)) / (1.0 + args.B * args.r * np.exp(1j * t))
            residual = float(np.max(np.abs(np.abs(w - geo.center) - geo.radius)))
            oracle = {"boundary_residual": residual, "samples": 2048}
        elif args.verify:
            oracle = {"note": "half-plane image; boundary residual check applies to disks only"}
        return {"A": args.A, "B": args.B, "r": args.r}, result, oracle
    if act == "origin":
        _need(args, ("A", "B"), act)
        p = JanowskiParams(args.A, args.B)
        return {"A": args.A, "B": args.B}, {"position": origin_position(p)}, None
    if act == "canonicalize":
        _need(args, ("A", "B"), act)
        p = JanowskiParams(args.A, args.B)
        return {"A": args.A, "B": args.B}, _asdict(canonicalize(p)), None
    if act == "contains":
        _need(args, ("A", "B", "inner_A", "inner_B"), act)
        outer = image_disk(JanowskiParams(args.A, args.B), args.r)
        inner = image_disk(JanowskiParams(args.inner_A, args.inner_B), args.inner_r)
        verdict = contains(outer, inner, tol=args.tol)
        params = {
            "A": args.A,
            "B": args.B,
            "r": args.r,
            "inner_A": args.inner_A,
            "inner_B": args.inner_B,
            "inner_r": args.inner_r,
        }
        return params, {"contains": verdict}, None
    raise ParameterError(f"unknown geometry action {act!r}")


def _bounds_params(args) -> JanowskiParams:
    _need(args, ("A", "B"), args.action)
    return JanowskiParams(args.A, args.B, args.alpha, args.gamma)


def _cmd_bounds(args):
    act = args.action
    if act == "envelope":
        p = _bounds_params(args)
        report = envelope_bounds(p, args.r)
        oracle = None
        if args.verify:
            emp = empirical_bounds(p, args.r, n=100_000)
            gaps = [
                abs(a - b)
                for pair in ("arg", "mod", "re", "im")
                for a, b in zip(getattr(report, pair), getattr(emp, pair))
            ]
            oracle = {"max_endpoint_gap": max(gaps), "samples": 100_000}
        params = {"A": args.A, "B": args.B, "alpha": args.alpha, "gamma": args.gamma, "r": args.r}
        return params, _asdict(report), oracle
    if act == "critical":
        p = _bounds_params(args)
        params = {"A": args.A, "B": args.B, "alpha": args.alpha, "gamma": args.gamma, "r": args.r}
        return params, _asdict(critical_points(p, args.r)), None
    if act == "sector":
        _need(args, ("m",), act)
        img = sector_image(args.alpha, args.m)
        return {"alpha": args.alpha, "m": args.m}, _asdict(img), None
    if act == "tilt":
        _need(args, ("b", "m"), act)
        return {"b": args.b, "m": args.m}, {"tilt": tilt_angle(args.b, args.m)}, None
    if act == "nesting":
        _need(args, ("A", "B", "a1", "a2"), act)
        nested = alpha_nesting(args.A, args.B, args.a1, args.a2)
        params = {"A": args.A, "B": args.B, "a1": args.a1, "a2": args.a2}
        return params, {"nested": nested}, None
    if act == "ratio-sector":
        _need(args, ("m", "beta", "phi"), act)
        sp = ratio_sector_params(args.alpha, args.m, args.beta, args.phi)
        params = {"alpha": args.alpha, "m": args.m, "beta": args.beta, "phi": args.phi}
        return params, _asdict(sp), None
    if act == "derivative-sector":
        _need(args, ("m",), act)
        sp, arg_bound = derivative_sector_params(args.alpha, args.m)
        result = _asdict(sp)
        result["arg_bound"] = arg_bound
        return {"alpha": args.alpha, "m": args.m}, result, None
    if act == "weighted-sector":
        _need(args, ("beta", "gamma2", "m", "eta"), act)
        sp = weighted_sector_params(args.alpha, args.beta, args.gamma2, args.m, args.eta)
        params = {"alpha": args.alpha, "beta": args.beta, "gamma": args.gamma2, "m": args.m, "eta": args.eta}
        return params, _asdict(sp), None
    if act == "reciprocal-sector":
        _need(args, ("beta",), act)
        delta = reciprocal_order_sector(args.alpha, args.beta)
        return {"alpha": args.alpha, "beta": args.beta}, {"delta": delta}, None
    if act == "eta-inf":
        _need(args, ("weight", "beta"), act)
        w = args.weight

        def const_weight(z):
            return np.full_like(np.asarray(z, dtype=complex), w)

        value = eta_infimum(const_weight, args.beta)
        return {"weight": w, "beta": args.beta}, {"eta": value}, None
    if act == "double-tilt":
        _need(args, ("a", "b", "c", "d", "l", "m"), act)
        rep = double_subordination_tilt(args.a, args.b, args.c, args.d, args.l, args.m, args.alpha, strict=False)
        params = {"a": args.a, "b": args.b, "c": args.c, "d": args.d, "l": args.l, "m": args.m, "alpha": args.alpha}
        return params, _asdict(rep), None
    raise ParameterError(f"unknown bounds action {act!r}")


def _cmd_radius(args):
    act = args.action
    if act == "subordination":
        _need(args, ("A", "B", "C", "D"), act)
        prob = RadiusProblem(args.A, args.B, args.alpha, args.gamma, args.C, args.D, args.beta, args.delta)
        params = {k: getattr(args, k) for k in ("A", "B", "alpha", "gamma", "C", "D", "beta", "delta")}
        return params, {"radius": subordination_radius(prob)}, None
    if act == "inclusion":
        _need(args, ("A", "B", "C", "D"), act)
        included = class_inclusion(args.A, args.B, args.alpha, args.C, args.D, args.beta)
        params = {k: getattr(args, k) for k in ("A", "B", "alpha", "C", "D", "beta")}
        return params, {"included": included, "orientation_note": INCLUSION_ORIENTATION_NOTE}, None
    if act == "uralegaddi":
        _need(args, ("A", "B", "beta2"), act)
        value = uralegaddi_radius(args.A, args.B, args.alpha, args.beta2)
        params = {"A": args.A, "B": args.B, "alpha": args.alpha, "beta2": args.beta2}
        return params, {"radius": value}, None
    if act == "reciprocal":
        _need(args, ("A", "B", "beta2"), act)
        value = reciprocal_radius(args.A, args.B, args.alpha, args.beta2)
        params = {"A": args.A, "B": args.B, "alpha": args.alpha, "beta2": args.beta2}
        return params, {"radius": value}, None
    if act == "alpha-star":
        value = alpha_star(tol=args.tol)
        residual = 2.0 * value + (2.0 / math.pi) * math.atan(value) - 1.0
        return {"tol": args.tol}, {"alpha_star": value, "residual": residual}, None
    if act == "starlike":
        _need(args, ("A", "B", "beta"), act)
        a = _real(args.A, "A")
        b = _real(args.B, "B")
        rep = starlike_radius(a, b, args.beta, method=args.method)
        oracle = None
        if args.verify:
            other = "bisect" if args.method == "closed" else "closed"
            alt = starlike_radius(a, b, args.beta, method=other)
            oracle = {"alternate_method": other, "gap": abs(alt.value - rep.value)}
        params = {"A": a, "B": b, "beta": args.beta, "method": args.method}
        return params, _asdict(rep), oracle
    raise ParameterError(f"unknown radius action {act!r}")


def _cmd_special(args):
    act = args.action
    if act == "3f2":
        _need(args, ("a1", "a2", "a3", "b1", "b2", "x"), act)
        value = hyper_3f2(args.a1, args.a2, args.a3, args.b1, args.b2, args.x, tol=args.tol)
        oracle = None
        if args.verify:
            tighter = hyper_3f2(args.a1, args.a2, args.a3, args.b1, args.b2, args.x, tol=args.tol * 1e-2)
            oracle = {"tightened_tol_drift": abs(value - tighter)}
        params = {k: getattr(args, k) for k in ("a1", "a2", "a3", "b1", "b2", "x", "tol")}
        return params, {"value": value}, oracle
    if act == "kernel":
        _need(args, ("A", "b", "z"), act)
        value = kernel_integral(args.A, args.b, args.alpha, args.z, tol=args.tol, method=args.method)
        oracle = None
        if args.verify and args.alpha == 1.0:
            other = "closed" if args.method == "quad" else "quad"
            alt = kernel_integral(args.A, args.b, args.alpha, args.z, tol=args.tol, method=other)
            oracle = {"alternate_method": other, "gap": abs(alt - value)}
        elif args.verify:
            oracle = {"note": "closed-form cross-check exists only at alpha = 1"}
        params = {"A": args.A, "b": args.b, "alpha": args.alpha, "z": args.z, "tol": args.tol, "method": args.method}
        return params, {"value": value}, oracle
    if act == "macgregor":
        _need(args, ("beta",), act)
        return {"beta": args.beta}, {"value": macgregor_gamma(args.beta)}, None
    if act == "dominant":
        _need(args, ("A", "b", "gamma", "mu", "eta", "delta", "rho", "z"), act)
        spec = DominantSpec(args.A, args.b, args.alpha, args.gamma, args.mu, args.eta, args.delta, args.rho)
        value = operator_dominant(spec, args.z)
        params = {k: getattr(args, k) for k in ("A", "b", "alpha", "gamma", "mu", "eta", "delta", "rho", "z")}
        return params, {"value": value, "value_at_origin": spec.value_at_origin}, None
    if act == "best-q":
        _need(args, ("A", "B", "z"), act)
        target = JanowskiParams(args.A, args.B, args.alpha)

        def psi(t: complex) -> complex:
            return complex(eval_powered(target, t))

        def lam(t: complex) -> complex:
            return 1.0 + 0.0j

        value = best_dominant(psi, lam, args.z, tol=args.tol)
        oracle = None
        if args.verify:
            tighter = best_dominant(psi, lam, args.z, tol=args.tol * 1e-2)
            oracle = {"tightened_tol_drift": abs(value - tighter)}
        params = {"A": args.A, "B": args.B, "alpha": args.alpha, "z": args.z, "tol": args.tol}
        return params, {"value": value}, oracle
    if act == "silverman":
        _need(args, ("A", "b", "beta"), act)
        verdict = silverman_inclusion(args.A, args.b, args.alpha, args.beta)
        params = {"A": args.A, "b": args.b, "alpha": args.alpha, "beta": args.beta}
        return params, {"included": verdict}, None
    raise ParameterError(f"unknown special action {act!r}")


def _cmd_verify(args):
    ids = list(THEOREM_IDS) if args.theorem_id == "all" else [args.theorem_id]
    reports = []
    unsound = 0
    for tid in ids:
        for seed in range(args.seed, args.seed + args.seeds):
            rep = implication_trial(tid, seed=seed)
            if not rep.sound:
                unsound += 1
            reports.append(json.loads(rep.to_json()))
    params = {"theorem_id": args.theorem_id, "first_seed": args.seed, "seeds": args.seeds}
    result = {"trials": len(reports), "unsound": unsound, "reports": reports}
    return params, result, None


def _svg_document(xs: np.ndarray, ys: np.ndarray) -> str:
    xs = np.concatenate([xs, [0.0, 1.0]])
    ys = np.concatenate([ys, [0.0, 0.0]])
    xmin, xmax = float(xs.min()), float(xs.max())
    ymin, ymax = float(ys.min()), float(ys.max())
    pad = 0.1 * max(xmax - xmin, ymax - ymin, 1e-9)
    xmin, xmax, ymin, ymax = xmin - pad, xmax + pad, ymin + -pad, ymax + pad
    size = 640.0
    scale = (size - 40.0) / max(xmax - xmin, ymax - ymin)

    def px(x: float) -> float:
        return 20.0 + (x - xmin) * scale

    def py(y: float) -> float:
        return size - 20.0 - (y - ymin) * scale

    pts = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in zip(xs[:-2], ys[:-2]))
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0f}" height="{size:.0f}" '
        f'viewBox="0 0 {size:.0f} {size:.0f}">',
        f'<rect width="{size:.0f}" height="{size:.0f}" fill="white"/>',
    ]
    if xmin < 0.0 < xmax:
        lines.append(
            f'<line x1="{px(0):.2f}" y1="{py(ymin):.2f}" x2="{px(0):.2f}" y2="{py(ymax):.2f}" '
            'stroke="#999" stroke-width="1"/>'
        )
    if ymin < 0.0 < ymax:
        lines.append(
            f'<line x1="{px(xmin):.2f}" y1="{py(0):.2f}" x2="{px(xmax):.2f}" y2="{py(0):.2f}" '
            'stroke="#999" stroke-width="1"/>'
        )
    lines.append(f'<polyline points="{pts}" fill="none" stroke="#0a58ca" stroke-width="1.5"/>')
    for mark, label in ((0.0, "0"), (1.0, "1")):
        lines.append(f'<circle cx="{px(mark):.2f}" cy="{py(0):.2f}" r="3" fill="#d63333"/>')
        lines.append(
            f'<text x="{px(mark) + 6:.2f}" y="{py(0) - 6:.2f}" font-size="14" '
            f'font-family="sans-serif" fill="#333">{label}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _cmd_plot(args):
    _need(args, ("A", "B"), args.action)
    p = JanowskiParams(args.A, args.B, args.alpha, args.gamma)
    params = {
        "A": args.A,
        "B": args.B,
        "alpha": args.alpha,
        "gamma": args.gamma,
        "r": args.r,
        "n": args.n,
    }
    if args.action == "svg":
        curve = sample_curve(p, args.r, n=args.n)
        re = curve.M * np.cos(curve.N)
        im = curve.M * np.sin(curve.N)
        path = Path(args.out or "envelope.svg")
        path.write_text(_svg_document(re, im))
        return params, {"path": str(path), "points": args.n}, None
    if args.action == "csv":
        curve = sample_curve(p, args.r, n=args.n)
        rows = ["t,u,v,M,N"]
        for k in range(args.n):
            rows.append(
                ",".join(
                    format(val, ".15g")
                    for val in (curve.t[k], curve.u[k], curve.v[k], curve.M[k], curve.N[k])
                )
            )
        path = Path(args.out or "envelope.csv")
        path.write_text("\n".join(rows) + "\n")
        return params, {"path": str(path), "rows": args.n}, None
    raise ParameterError(f"unknown plot action {args.action!r}")


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    default_seed = int(os.environ.get("JANOWSKI_SEED", "0"))
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=default_seed, help="deterministic seed (env JANOWSKI_SEED)")
    common.add_argument("--out", type=str, default=None, help="write output to this path instead of stdout")
    common.add_argument("--verify", action="store_true", help="append an independent cross-check block")

    parser = argparse.ArgumentParser(prog="janowski", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    geo = sub.add_parser("geometry", parents=[common], help="disk images of the bilinear map")
    geo.add_argument("action", choices=["image-disk", "origin", "canonicalize", "contains"])
    geo.add_argument("--A", type=parse_complex)
    geo.add_argument("--B", type=parse_complex)
    geo.add_argument("--r", type=float, default=1.0)
    geo.add_argument("--inner-A", dest="inner_A", type=parse_complex)
    geo.add_argument("--inner-B", dest="inner_B", type=parse_complex)
    geo.add_argument("--inner-r", dest="inner_r", type=float, default=1.0)
    geo.add_argument("--tol", type=float, default=1e-12)
    geo.set_defaults(handler=_cmd_geometry)

    bnd = sub.add_parser("bounds", parents=[common], help="powered envelope ranges and sector calculus")
    bnd.add_argument("action", nargs="?", default="envelope", choices=[
        "envelope", "critical", "sector", "tilt", "nesting", "ratio-sector",
        "derivative-sector", "weighted-sector", "reciprocal-sector", "eta-inf", "double-tilt",
    ])
    bnd.add_argument("--A", type=parse_complex)
    bnd.add_argument("--B", type=parse_complex)
    bnd.add_argument("--alpha", type=float, default=1.0)
    bnd.add_argument("--gamma", type=float, default=0.0)
    bnd.add_argument("--gamma2", type=float, help="outer exponent for weighted-sector")
    bnd.add_argument("--r", type=float, default=1.0)
    bnd.add_argument("--m", type=float)
    bnd.add_argument("--b", type=float)
    bnd.add_argument("--beta", type=float)
    bnd.add_argument("--phi", type=parse_angle, help="comparison-ratio argument (accepts pi suffix)")
    bnd.add_argument("--eta", type=float)
    bnd.add_argument("--weight", type=parse_complex, help="constant weight for eta-inf")
    bnd.add_argument("--a1", type=float)
    bnd.add_argument("--a2", type=float)
    bnd.add_argument("--a", type=float)
    bnd.add_argument("--c", type=float)
    bnd.add_argument("--d", type=float)
    bnd.add_argument("--l", type=float)
    bnd.set_defaults(handler=_cmd_bounds)

    rad = sub.add_parser("radius", parents=[common], help="radius constants and inclusion tests")
    rad.add_argument("action", choices=[
        "subordination", "inclusion", "uralegaddi", "reciprocal", "alpha-star", "starlike",
    ])
    rad.add_argument("--A", type=parse_complex)
    rad.add_argument("--B", type=parse_complex)
    rad.add_argument("--C", type=parse_complex)
    rad.add_argument("--D", type=parse_complex)
    rad.add_argument("--alpha", type=float, default=1.0)
    rad.add_argument("--beta", type=float, default=1.0)
    rad.add_argument("--gamma", type=float, default=0.0)
    rad.add_argument("--delta", type=float, default=0.0)
    rad.add_argument("--beta2", type=float)
    rad.add_argument("--tol", type=float, default=1e-12)
    rad.add_argument("--method", choices=["closed", "bisect"], default="closed")
    rad.set_defaults(handler=_cmd_radius)

    spc = sub.add_parser("special", parents=[common], help="series, kernels, and dominants")
    spc.add_argument("action", choices=["3f2", "kernel", "macgregor", "dominant", "best-q", "silverman"])
    spc.add_argument("--a1", type=parse_complex)
    spc.add_argument("--a2", type=parse_complex)
    spc.add_argument("--a3", type=parse_complex)
    spc.add_argument("--b1", type=parse_complex)
    spc.add_argument("--b2", type=parse_complex)
    spc.add_argument("--x", type=parse_complex)
    spc.add_argument("--A", type=parse_complex)
    spc.add_argument("--B", type=parse_complex)
    spc.add_argument("--b", type=float)
    spc.add_argument("--alpha", type=float, default=1.0)
    spc.add_argument("--beta", type=float)
    spc.add_argument("--gamma", type=float)
    spc.add_argument("--mu", type=parse_complex)
    spc.add_argument("--eta", type=parse_complex)
    spc.add_argument("--delta", type=parse_complex)
    spc.add_argument("--rho", type=parse_complex)
    spc.add_argument("--z", type=parse_complex)
    spc.add_argument("--tol", type=float, default=1e-10)
    spc.add_argument("--method", choices=["quad", "closed"], default="quad")
    spc.set_defaults(handler=_cmd_special)

    ver = sub.add_parser("verify", parents=[common], help="randomized implication trials")
    ver.add_argument("--theorem-id", dest="theorem_id", default="all", choices=list(THEOREM_IDS) + ["all"])
    ver.add_argument("--seeds", type=int, default=1, help="number of consecutive seeds starting at --seed")
    ver.set_defaults(handler=_cmd_verify)

    plt = sub.add_parser("plot", parents=[common], help="SVG and CSV artifacts of boundary curves")
    plt.add_argument("action", nargs="?", default="svg", choices=["svg", "csv"])
    plt.add_argument("--A", type=parse_complex)
    plt.add_argument("--B", type=parse_complex)
    plt.add_argument("--alpha", type=float, default=1.0)
    plt.add_argument("--gamma", type=float, default=0.0)
    plt.add_argument("--r", type=float, default=1.0)
    plt.add_argument("--n", type=int, default=2048)
    plt.set_defaults(handler=_cmd_plot)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse handles --help/--version (code 0) and flag-level parse
        # failures itself; fold the latter into the precondition exit code
        return 0 if exc.code in (0, None) else 2
    try:
        params, result, oracle = args.handler(args)
    except ParameterError as exc:
        print(json.dumps({"error": str(exc), "kind": "parameter"}), file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(json.dumps({"error": str(exc), "kind": "numerical"}), file=sys.stderr)
        return 3
    envelope = {
        "command": f"{args.command} {getattr(args, 'action', '')}".strip(),
        "params": params,
        "result": result,
        "version": __version__,
        "seed": args.seed,
    }
    if oracle is not None:
        envelope["oracle"] = oracle
    text = json.dumps(_jsonable(envelope), indent=2, sort_keys=True)
    if args.out and args.command != "plot":
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
