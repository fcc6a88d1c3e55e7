"""Command-line front end: inspect structures, test wedge membership,
run verification suites.  All reports are machine-readable JSON (or a
plain table), deterministic for fixed seed and flags.

Exit codes: 0 success / all checks passed, 1 verification failure,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .cones import build_cone, in_max_cone, omega_member, positivity_member
from .errors import DomainError
from .flows import CosetPoint, geodesic_orbit_test
from .grading import canonical_euler, euler_labels, symmetric_structure
from .jts import ball_status, triple_system
from .liecore import group_exp, group_product, parse_algebra
from .numerics import Tolerances
from .verify import SUITES, VerifyConfig, run_suite

USAGE_ERROR = 2


def _tolerances(args) -> Tolerances:
    eq = args.tol
    band = args.band
    spec = max(1e-7, eq)
    band = max(band, spec)
    return Tolerances(eq_tol=eq, spec_tol=spec, boundary_band=band)


def _setup(args):
    alg = parse_algebra(args.algebra)
    h = canonical_euler(alg, args.euler)
    st = symmetric_structure(h, _tolerances(args))
    return alg, st


def _emit(report: dict, output: str) -> None:
    if output == "json":
        print(json.dumps(report, sort_keys=True, separators=(",", ":")))
        return
    for key, value in sorted(report.items()):
        if isinstance(value, dict):
            print(f"{key}:")
            for k2, v2 in sorted(value.items()):
                print(f"  {k2}: {v2}")
        elif isinstance(value, list):
            print(f"{key}:")
            for item in value:
                print(f"  {item}")
        else:
            print(f"{key}: {value}")


def cmd_info(args) -> int:
    alg, st = _setup(args)
    cone = build_cone(st, sample_count=args.samples, seed=args.seed)
    report = {
        "algebra": alg.name,
        "dim": alg.dim,
        "euler": args.euler,
        "euler_labels": euler_labels(alg),
        "grading_dims": list(st.grading.dims),
        "subspace_dims": {name: st.dim(name) for name in ("hk", "hp", "qk", "qp")},
        "dim_h_alg": st.dim("h"),
        "dim_q": st.dim("q"),
        "cone": {
            "sample_count": cone.sample_count,
            "seed": cone.seed,
            "exact": cone.exact or "sampled",
        },
        "config": _config_dict(args),
    }
    _emit(report, args.output)
    return 0


def _parse_word(steps, st):
    """Resolve word steps "name:t" against the structure's named
    generators: h (Euler), z/z<i> (q_k rotations), h0/h0<i> (h boosts),
    g1:<i> and gm1:<i> (grading bases)."""
    word = []
    for step in steps:
        try:
            name, t_text = step.rsplit(":", 1)
            t = float(t_text)
        except ValueError as exc:
            raise DomainError(f"cannot parse word step {step!r}") from exc
        name = name.strip().lower()
        if name == "h":
            el = st.h
        elif name.startswith("z"):
            idx = int(name[1:]) if name[1:] else 0
            el = st.rotation_generators[idx]
        elif name.startswith("h0"):
            idx = int(name[2:]) if name[2:] else 0
            el = st.boost_generators[idx]
        elif name.startswith("g1."):
            el = st.algebra.element(st.grading.basis_plus[int(name[3:])])
        elif name.startswith("gm1."):
            el = st.algebra.element(st.grading.basis_minus[int(name[4:])])
        else:
            raise DomainError(f"unknown generator {name!r}")
        word.append((name, t, el))
    return word


def cmd_wedge(args) -> int:
    alg, st = _setup(args)
    cone = build_cone(st, sample_count=args.samples, seed=args.seed)
    word = _parse_word(args.step, st)
    if word:
        g = group_product(*(group_exp(t * el) for _, t, el in word))
    else:
        from .liecore import group_identity

        g = group_identity(alg)
    ts = triple_system(st)
    report = {
        "algebra": alg.name,
        "word": [{"generator": n, "t": t} for n, t, _ in word],
        "positivity_member": positivity_member(g, cone),
        "ball_status": ball_status(ts, g),
        "geodesic_orbit": geodesic_orbit_test(CosetPoint(st, g), cone),
        "config": _config_dict(args),
    }
    if len(word) == 1 and word[0][0].startswith("z"):
        x = word[0][1] * word[0][2]
        report["omega_member"] = omega_member(x, st)
    _emit(report, args.output)
    return 0


def cmd_verify(args) -> int:
    cfg = VerifyConfig(
        seed=args.seed,
        samples=args.samples,
        grid=args.grid,
        tmax=args.tmax,
        tols=_tolerances(args),
    )
    report = run_suite(args.suite, cfg)
    _emit(report, args.output)
    return 0 if report["summary"]["failed"] == 0 else 1


def _config_dict(args) -> dict:
    return {
        "seed": args.seed,
        "samples": args.samples,
        "eq_tol": args.tol,
        "boundary_band": args.band,
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nccgeo",
        description="Euler elements, invariant cones and wedge domains, numerically.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, samples_default):
        p.add_argument("--algebra", default="sl:2", help='e.g. "sl:2", "so:1,2", "sp:4"')
        p.add_argument("--euler", default="h1", help='Euler label, e.g. "h1", "boost", "hn"')
        p.add_argument("--tol", type=float, default=1e-9, help="equality tolerance")
        p.add_argument("--band", type=float, default=1e-6, help="boundary band")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--samples", type=int, default=samples_default)
        p.add_argument("--output", choices=("json", "table"), default="json")
        p.add_argument("--grid", type=int, default=64, help="t-grid size for scans")
        p.add_argument("--tmax", type=float, default=20.0, help="observer scan range")

    p_info = sub.add_parser("info", help="dimensions and splittings of a structure")
    common(p_info, 128)
    p_info.set_defaults(func=cmd_info)

    p_wedge = sub.add_parser("wedge", help="membership verdicts for a group word")
    common(p_wedge, 512)
    p_wedge.add_argument(
        "--step",
        action="append",
        default=[],
        metavar="GEN:T",
        help='word step, e.g. "z:0.5" (repeatable; applied left to right)',
    )
    p_wedge.set_defaults(func=cmd_wedge)

    p_verify = sub.add_parser("verify", help="run a property suite")
    p_verify.add_argument("suite", choices=sorted(SUITES) + ["all"])
    common(p_verify, 0)
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
