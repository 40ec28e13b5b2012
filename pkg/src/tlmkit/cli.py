"""Command line front end.

Exit codes: 0 all requested checks passed (or a plain computation
succeeded), 1 at least one check failed, 2 usage or parameter errors,
3 I/O problems (unreadable input, refused overwrite, bad baseline file).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import __version__
from .errors import BandCoverageError, BaselineError, ParameterError, QuadratureError
from .grid import GridFunction, GridSpec, random_bandlimited, read_binary, read_csv
from .interp import (
    boundary_lipschitz_check,
    build_analytic_family,
    family_F,
    family_G,
    global_growth_check,
    holomorphy_residual,
    make_setup,
)
from .lpaley import build_family
from .morrey import LebesguePair, WindowSampler, morrey_norm
from .report import BaselineStore, VerificationReport, report_payload, safe_ratio, write_json
from .spaces import (
    SpaceParams,
    diamond_criterion,
    ensure_band_covered,
    persistent_block_function,
    tlm_norm,
)
from .suites import (
    SuiteConfig,
    calibrate_constants,
    run_maximal_suite,
    run_scalar_empirical_suite,
    run_scalar_exact_suite,
    verify_all,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3

_DEMO_SEED_OFFSET = 17


def _parse_radii(text: str) -> tuple:
    try:
        return tuple(sorted(float(x) for x in text.split(",") if x.strip()))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad radii list {text!r}: {exc}")


def _parse_r(text: str) -> float:
    if text.strip().lower() in ("inf", "infinity"):
        return float("inf")
    return float(text)


def _add_grid_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--grid-dim", type=int, default=1, help="spatial dimension (default 1)")
    p.add_argument("--grid-points", type=int, default=256,
                   help="points per axis, power of two (default 256)")
    p.add_argument("--grid-length", type=float, default=2.0 * np.pi,
                   help="torus side length (default 2*pi)")
    p.add_argument("--jmax", type=int, default=6, help="top dyadic band (default 6)")
    p.add_argument("--seed", type=int, default=20260813, help="corpus seed")


def _add_window_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--windows", choices=("cube", "ball"), default="cube",
                   help="window shape for Morrey sups (default cube)")
    p.add_argument("--radii", type=_parse_radii, default=None,
                   help="comma separated window radii (default dyadic)")
    p.add_argument("--stride", type=int, default=1,
                   help="window center stride (default 1, every point)")


def _add_out_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", default=None, help="write a JSON report here")


def _add_baseline_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--baseline", default="bundled",
                   help="'bundled', 'none', or a path to a calibrated baseline")


def _spec_from_args(args) -> GridSpec:
    return GridSpec(args.grid_dim, args.grid_points, args.grid_length)


def _sampler_from_args(args, spec: GridSpec) -> WindowSampler:
    if args.radii is None:
        return WindowSampler.dyadic(spec, args.windows, args.stride)
    sampler = WindowSampler(args.radii, args.stride, args.windows)
    sampler.validate_against(spec)
    return sampler


def _config_from_args(args) -> SuiteConfig:
    return SuiteConfig(seed=args.seed, points=args.grid_points,
                       length=args.grid_length, j_max=args.jmax,
                       window_shape=getattr(args, "windows", "cube"),
                       quad_nodes=getattr(args, "quad_nodes", 32))


def _resolve_baseline(token: str):
    if token == "none":
        return None
    if token == "bundled":
        try:
            return BaselineStore.bundled()
        except BaselineError:
            print("warning: no bundled baseline; empirical checks stay not-decided",
                  file=sys.stderr)
            return None
    return BaselineStore.load(token)


def _load_input(args, spec: GridSpec) -> GridFunction:
    path = args.input
    if path.endswith(".csv"):
        return read_csv(path, spec)
    f = read_binary(path)
    return f


def _print_reports(reports) -> int:
    n_failed = 0
    for rep in reports:
        mark = f"[{rep.verdict}]"
        print(f"{mark:<14} {rep.check:<42} lhs={rep.lhs:.6g} rhs={rep.rhs:.6g} "
              f"ratio={rep.ratio:.6g} ({rep.runtime:.2f}s)")
        if rep.verdict == "fail":
            n_failed += 1
    n_open = sum(1 for r in reports if r.verdict == "not-decided")
    print(f"-- {len(reports)} checks: {len(reports) - n_failed - n_open} passed, "
          f"{n_failed} failed, {n_open} not decided")
    return n_failed


def _finish(args, reports, meta: dict) -> int:
    n_failed = _print_reports(reports)
    if args.out:
        write_json(args.out, report_payload(reports, meta))
        print(f"report written to {args.out}")
    return EXIT_CHECK_FAILED if n_failed else EXIT_OK


# ------------------------------------------------------------------ commands

def cmd_verify_all(args) -> int:
    cfg = _config_from_args(args)
    baseline = _resolve_baseline(args.baseline)
    reports = verify_all(cfg, baseline)
    return _finish(args, reports, cfg.meta())


def cmd_calibrate(args) -> int:
    if os.path.exists(args.out) and not args.force:
        # refuse before spending time on the sweep
        raise BaselineError(f"{args.out} exists; pass --force to overwrite")
    cfg = _config_from_args(args)
    store = calibrate_constants(cfg)
    store.save(args.out, force=args.force)
    print(f"calibrated {len(store.constants)} constants -> {args.out}")
    return EXIT_OK


def cmd_morrey_norm(args) -> int:
    spec = _spec_from_args(args)
    if args.input:
        f = _load_input(args, spec)
        spec = f.spec
    else:
        # demo input: indicator of the unit ball around the origin
        dist = sum(np.minimum(x, spec.length - x) ** 2 for x in spec.coordinates)
        f = GridFunction(spec, (np.sqrt(dist) <= 1.0).astype(np.complex128))
        if args.radii is None:
            base = WindowSampler.dyadic(spec, args.windows).radii
            args.radii = tuple(sorted(set(base) | {0.5, 0.75, 1.0, 1.25, 1.5}))
    sampler = _sampler_from_args(args, spec)
    pq = LebesguePair(args.p, args.q)
    value = morrey_norm(f, pq, sampler)
    print(f"morrey-norm p={args.p:g} q={args.q:g} windows={args.windows}: {value:.12g}")
    if args.out:
        write_json(args.out, {"norm": value, "p": args.p, "q": args.q,
                              "windows": args.windows, "radii": list(sampler.radii)})
    return EXIT_OK


def cmd_tlm_norm(args) -> int:
    spec = _spec_from_args(args)
    if args.input:
        f = _load_input(args, spec)
        spec = f.spec
    else:
        f = random_bandlimited(spec, min(4, args.jmax - 1), args.seed + _DEMO_SEED_OFFSET)
    params = SpaceParams(args.p, args.q, args.r, args.s)
    family = build_family(spec, args.jmax, args.flavor)
    ensure_band_covered(family, f)
    sampler = _sampler_from_args(args, spec)
    value = tlm_norm(f, family, params, sampler)
    print(f"tlm-norm p={args.p:g} q={args.q:g} r={args.r:g} s={args.s:g}: {value:.12g}")
    if args.out:
        write_json(args.out, {"norm": value, "p": args.p, "q": args.q,
                              "r": args.r, "s": args.s, "j_max": args.jmax,
                              "flavor": args.flavor})
    return EXIT_OK


def cmd_diamond_check(args) -> int:
    spec = _spec_from_args(args)
    family = build_family(spec, args.jmax, "plain")
    params = SpaceParams(args.p, args.q, args.r, args.s)
    if args.input:
        f = _load_input(args, spec)
        spec = f.spec
        family = build_family(spec, args.jmax, "plain")
    elif args.profile == "persistent":
        f = persistent_block_function(spec, family, s=args.s)
    else:
        f = random_bandlimited(spec, min(4, args.jmax - 1), args.seed + _DEMO_SEED_OFFSET)
    ensure_band_covered(family, f)
    sampler = _sampler_from_args(args, spec)
    rep = diamond_criterion(f, family, params, sampler)
    _print_reports([rep])
    if args.out:
        write_json(args.out, report_payload([rep], {"profile": args.profile}))
    if args.expect and rep.verdict != args.expect:
        print(f"expected verdict {args.expect!r}, got {rep.verdict!r}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    return EXIT_CHECK_FAILED if rep.verdict == "fail" else EXIT_OK


def cmd_interp_demo(args) -> int:
    spec = _spec_from_args(args)
    setup = make_setup(args.theta,
                       SpaceParams(args.p0, args.q0, args.r0, args.s0),
                       SpaceParams(args.p1, args.q1, args.r1, args.s1))
    if args.input:
        f = _load_input(args, spec)
        spec = f.spec
    else:
        f = random_bandlimited(spec, min(4, args.jmax - 1), args.seed + _DEMO_SEED_OFFSET)
    family = build_family(spec, args.jmax, "square_root")
    sampler = _sampler_from_args(args, spec)
    fam = build_analytic_family(args.kind, setup, f, family, sampler)

    reports = []
    mid = family_F(fam, setup.theta)
    scale = float(np.linalg.norm(fam.base.values.ravel()))
    recon = float(np.linalg.norm((mid - fam.base).values.ravel())) / max(scale, 1e-300)
    reports.append(VerificationReport(
        check="reconstruction", parameters={"kind": args.kind},
        lhs=recon, rhs=1e-10, ratio=safe_ratio(recon, 1e-10),
        verdict="pass" if recon <= 1e-10 else "fail",
    ))
    anchor = float(np.linalg.norm(family_G(fam, setup.theta).values.ravel()))
    reports.append(VerificationReport(
        check="contour-anchor", parameters={},
        lhs=anchor, rhs=0.0, ratio=safe_ratio(anchor, 0.0),
        verdict="pass" if anchor == 0.0 else "fail",
    ))
    residual = holomorphy_residual(fam, setup.theta + 0.1 + 0.2j, seed=args.seed)
    reports.append(VerificationReport(
        check="holomorphy", parameters={"z": repr(setup.theta + 0.1 + 0.2j)},
        lhs=residual, rhs=1e-6, ratio=safe_ratio(residual, 1e-6),
        verdict="pass" if residual <= 1e-6 else "fail",
    ))
    pairs = [(0.0, t) for t in (0.05, 0.2, 0.5, 1.0)]
    for side in (0, 1):
        reports.append(boundary_lipschitz_check(fam, side, pairs, sampler))
    zs = [setup.theta + 1j * t for t in (-2.0, -0.5, 0.5, 2.0)]
    reports.append(global_growth_check(fam, zs, sampler))

    trace = {rep.check: rep.to_dict() for rep in reports}
    n_failed = _print_reports(reports)
    if args.out:
        write_json(args.out, {"setup": {
            "theta": setup.theta, "kind": args.kind,
            "end0": vars(setup.end0), "end1": vars(setup.end1),
            "mid": vars(setup.mid)}, "checks": trace})
        print(f"trace written to {args.out}")
    return EXIT_CHECK_FAILED if n_failed else EXIT_OK


def cmd_scalar_suite(args) -> int:
    cfg = _config_from_args(args)
    baseline = _resolve_baseline(args.baseline)
    reports = run_scalar_exact_suite(cfg) + run_scalar_empirical_suite(cfg, baseline)
    return _finish(args, reports, cfg.meta())


def cmd_maximal_suite(args) -> int:
    cfg = _config_from_args(args)
    baseline = _resolve_baseline(args.baseline)
    reports = run_maximal_suite(cfg, baseline)
    return _finish(args, reports, cfg.meta())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tlmkit",
        description="Windowed smoothness-space norms and their verification suites.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-all", help="run every suite against the baseline")
    _add_grid_args(p)
    p.add_argument("--windows", choices=("cube", "ball"), default="cube")
    _add_baseline_arg(p)
    _add_out_arg(p)
    p.set_defaults(func=cmd_verify_all)

    p = sub.add_parser("calibrate", help="measure empirical constants on the seeded corpus")
    _add_grid_args(p)
    p.add_argument("--windows", choices=("cube", "ball"), default="cube")
    p.add_argument("--out", default="baseline.json", help="where to store the baseline")
    p.add_argument("--force", action="store_true", help="overwrite an existing file")
    p.set_defaults(func=cmd_calibrate)

    p = sub.add_parser("morrey-norm", help="windowed norm of a sampled function")
    _add_grid_args(p)
    _add_window_args(p)
    p.add_argument("--input", default=None, help=".bin or .csv sample file")
    p.add_argument("-p", type=float, default=4.0)
    p.add_argument("-q", type=float, default=2.0)
    _add_out_arg(p)
    p.set_defaults(func=cmd_morrey_norm)

    p = sub.add_parser("tlm-norm", help="smoothness-space norm of a sampled function")
    _add_grid_args(p)
    _add_window_args(p)
    p.add_argument("--input", default=None, help=".bin or .csv sample file")
    p.add_argument("-p", type=float, default=4.0)
    p.add_argument("-q", type=float, default=2.0)
    p.add_argument("-r", type=_parse_r, default=2.0, help="block aggregate ('inf' allowed)")
    p.add_argument("-s", type=float, default=0.5, help="smoothness weight")
    p.add_argument("--flavor", choices=("plain", "square_root"), default="plain")
    _add_out_arg(p)
    p.set_defaults(func=cmd_tlm_norm)

    p = sub.add_parser("diamond-check", help="vanishing-tail criterion for a function")
    _add_grid_args(p)
    _add_window_args(p)
    p.add_argument("--input", default=None, help=".bin or .csv sample file")
    p.add_argument("--profile", choices=("bandlimited", "persistent"),
                   default="bandlimited", help="demo input when no file is given")
    p.add_argument("-p", type=float, default=4.0)
    p.add_argument("-q", type=float, default=2.0)
    p.add_argument("-r", type=_parse_r, default=2.0)
    p.add_argument("-s", type=float, default=0.5)
    p.add_argument("--expect", choices=("pass", "not-decided"), default=None,
                   help="fail unless the verdict matches")
    _add_out_arg(p)
    p.set_defaults(func=cmd_diamond_check)

    p = sub.add_parser("interp-demo", help="analytic family diagnostics on one function")
    _add_grid_args(p)
    _add_window_args(p)
    p.add_argument("--input", default=None, help=".bin or .csv sample file")
    p.add_argument("--kind", choices=("exponent-shift", "four-exponent"),
                   default="exponent-shift")
    p.add_argument("--theta", type=float, default=0.5)
    p.add_argument("--p0", type=float, default=8.0)
    p.add_argument("--q0", type=float, default=4.0)
    p.add_argument("--r0", type=float, default=2.0)
    p.add_argument("--s0", type=float, default=0.0)
    p.add_argument("--p1", type=float, default=4.0)
    p.add_argument("--q1", type=float, default=2.0)
    p.add_argument("--r1", type=float, default=2.0)
    p.add_argument("--s1", type=float, default=0.0)
    _add_out_arg(p)
    p.set_defaults(func=cmd_interp_demo)

    p = sub.add_parser("scalar-suite", help="exact and empirical scalar inequalities")
    _add_grid_args(p)
    _add_baseline_arg(p)
    _add_out_arg(p)
    p.set_defaults(func=cmd_scalar_suite)

    p = sub.add_parser("maximal-suite", help="window maximal operator checks")
    _add_grid_args(p)
    p.add_argument("--windows", choices=("cube", "ball"), default="cube")
    _add_baseline_arg(p)
    _add_out_arg(p)
    p.set_defaults(func=cmd_maximal_suite)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParameterError, BandCoverageError, QuadratureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BaselineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
