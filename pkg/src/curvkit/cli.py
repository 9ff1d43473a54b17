"""Command-line surface: build model tensors, check curvature conditions,
run the verification suite, and integrate the reaction flow.

Exit codes: 0 success, 1 a requested assertion failed, 2 invalid input or
flags.  All seeded commands honor the CURVKIT_SEED environment variable when
--seed is not given.  JSON output is key-sorted and deterministic up to the
timestamp / wall-time fields.
"""

import argparse
import json
import os
import sys

import numpy as np

from .core import (CurvatureError, model_fubini_study, model_r0, model_sj,
                   model_sphere, ricci, scalar_curvature,
                   standard_complex_structure, standard_quaternion_triple, weyl)
from .flow import FlowConfig, cone_preservation_probe, integrate_q_flow
from .frames import OptimizerConfig, min_isotropic, pinching_constant
from .tensor_io import load_tensor, save_tensor, write_trace_csv
from .verify import run_verification_suite


def _env_seed(args, fallback: int) -> int:
    if args.seed is not None:
        return args.seed
    return int(os.environ.get("CURVKIT_SEED", fallback))


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2))


def cmd_model(args) -> int:
    n = args.n
    if args.kind == "sphere":
        R = model_sphere(n, args.param)
    elif args.kind == "fubini-study":
        if n % 2:
            raise CurvatureError("fubini-study requires even n")
        R = model_fubini_study(n // 2, args.param)[0]
    elif args.kind == "r0":
        if n % 4:
            raise CurvatureError("r0 requires n divisible by 4")
        R = model_r0(standard_quaternion_triple(n))
    else:  # sj
        if n % 2:
            raise CurvatureError("sj requires even n")
        R = model_sj(standard_complex_structure(n), scale=args.param)
    save_tensor(R, args.out)
    return 0


def cmd_check(args) -> int:
    R = load_tensor(args.infile)
    report = {"what": args.what, "n": R.n, "input": args.infile}
    tol = args.tol
    asserted_value = None
    if args.what in ("iso-min", "pinch"):
        seed = _env_seed(args, 0)
        cfg = OptimizerConfig(restarts=args.restarts, seed=seed)
        res = min_isotropic(R, cfg)
        value = res.value if args.what == "iso-min" else res.value / 4.0
        report.update(value=value, converged=res.converged,
                      iterations=res.iterations, restarts=args.restarts,
                      seed=seed)
        asserted_value = value
    elif args.what == "ricci":
        ric = ricci(R)
        eigs = np.linalg.eigvalsh(ric)
        report.update(ricci=[[float(v) for v in row] for row in ric],
                      eigenvalues=[float(v) for v in eigs],
                      scal=scalar_curvature(R))
        asserted_value = float(eigs[0])
    else:  # weyl
        report.update(weyl_norm=weyl(R).norm(), norm=R.norm())
    _emit(report)
    if args.assert_nonneg:
        if asserted_value is None:
            print("--assert-nonneg has no meaning for --what weyl", file=sys.stderr)
            return 2
        if asserted_value < -tol:
            return 1
    return 0


def cmd_verify(args) -> int:
    seed = _env_seed(args, 7)
    report = run_verification_suite(n=args.n, seed=seed, samples=args.samples,
                                    inject_defect=args.inject_defect)
    payload = report.to_dict()
    _emit(payload)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(payload, fh, sort_keys=True, indent=2)
    return 0 if report.passed else 1


def cmd_flow(args) -> int:
    R0 = load_tensor(args.infile)
    cfg = FlowConfig(t_end=args.t_end, dt_init=args.dt,
                     monitor_every=args.monitor_every)
    code = 0
    if args.assert_cone:
        try:
            probe = cone_preservation_probe(R0, cfg)
        except ValueError as exc:
            print(f"cone assertion failed: {exc}", file=sys.stderr)
            return 1
        trace = probe.trace
        summary = {"preserved": probe.preserved,
                   "worst_margin": probe.worst_margin}
        if not probe.preserved:
            code = 1
    else:
        _, trace = integrate_q_flow(R0, cfg)
        summary = {}
    summary.update(t_final=float(trace.times[-1]),
                   norm_final=float(trace.norm[-1]),
                   scal_final=float(trace.scalars[-1]),
                   terminated_by=trace.terminated_by,
                   steps_accepted=trace.steps_accepted)
    _emit(summary)
    if args.out_csv:
        write_trace_csv(trace, args.out_csv)
    return code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="curvkit",
                                description="pointwise curvature-tensor toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("model", help="write a model curvature tensor as JSON")
    m.add_argument("--kind", required=True,
                   choices=["sphere", "fubini-study", "r0", "sj"])
    m.add_argument("--n", type=int, required=True, help="ambient dimension")
    m.add_argument("--param", type=float, default=1.0,
                   help="scale: sphere lambda / fubini-study c / sj scale")
    m.add_argument("--out", required=True)
    m.set_defaults(func=cmd_model)

    c = sub.add_parser("check", help="evaluate a curvature condition on a tensor file")
    c.add_argument("--in", dest="infile", required=True)
    c.add_argument("--what", required=True,
                   choices=["iso-min", "pinch", "ricci", "weyl"])
    c.add_argument("--restarts", type=int, default=64)
    c.add_argument("--seed", type=int, default=None)
    c.add_argument("--tol", type=float, default=1e-8)
    c.add_argument("--assert-nonneg", action="store_true",
                   help="exit 1 when the checked value is below -tol")
    c.set_defaults(func=cmd_check)

    v = sub.add_parser("verify", help="run the identity verification suite")
    v.add_argument("--n", type=int, default=8)
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--samples", type=int, default=20)
    v.add_argument("--out", default=None, help="also write the JSON report here")
    v.add_argument("--inject-defect", action="store_true", help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("flow", help="integrate dR/dt = Q(R) from a tensor file")
    f.add_argument("--in", dest="infile", required=True)
    f.add_argument("--t-end", type=float, default=None)
    f.add_argument("--dt", type=float, default=1e-3)
    f.add_argument("--monitor-every", type=int, default=10)
    f.add_argument("--out-csv", default=None)
    f.add_argument("--assert-cone", action="store_true",
                   help="exit 1 unless nonnegative isotropic curvature persists")
    f.set_defaults(func=cmd_flow)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CurvatureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
