"""Command-line front end.

Every command prints a JSON summary (``command``, ``params``, ``result``,
``elapsed_ms``) on stdout; tabular output goes to ``--out`` as CSV.
Exit codes: 0 success, 1 a validation check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

import numpy as np

from . import detection, gaussian, validate
from ._io import atomic_write_text, fmt
from .sampling import DEFAULT_CHUNK, sample_single_mode, sample_two_mode

EXIT_OK, EXIT_FAILED, EXIT_BAD_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


SINGLE_STATES = ("vacuum", "coherent", "squeezed", "chaotic", "gaussian")


def _add_state_flags(p, states):
    p.add_argument("--state", choices=states, required=True)
    p.add_argument("--a", type=complex, default=0j, help="complex center, e.g. 0.5 or 0.3+0.1j")
    p.add_argument("--s", type=float, default=0.0, help="squeeze parameter")
    p.add_argument("--n", type=float, default=0.0, help="mean photon number")
    p.add_argument("--x", type=float, default=0.0, help="two-mode correlation")
    p.add_argument("--A", type=float, default=2.0, help="real-quadrature coefficient (gaussian)")
    p.add_argument("--B", type=float, default=2.0, help="imaginary-quadrature coefficient (gaussian)")


def _add_mc_flags(p, count=100_000):
    p.add_argument("--count", type=int, default=count)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1, help="worker threads; never changes results")
    p.add_argument("--chunk-size", type=int, default=DEFAULT_CHUNK)


def build_parser() -> Parser:
    parser = Parser(prog="stochoptics", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a two-mode (n, x) state")
    p.add_argument("--n", type=float, required=True)
    p.add_argument("--x", type=float, required=True)

    p = sub.add_parser("wigner-grid", help="tabulate a gaussian Wigner function")
    _add_state_flags(p, SINGLE_STATES + ("two-mode",))
    p.add_argument("--extent", type=float, default=3.0, help="half-width of each quadrature axis")
    p.add_argument("--steps", type=int, default=21, help="grid points per axis")
    p.add_argument("--out", required=True)

    p = sub.add_parser("sample", help="draw two-mode amplitudes to CSV")
    p.add_argument("--n", type=float, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--polarized", action="store_true")
    _add_mc_flags(p)
    p.add_argument("--out", required=True)

    p = sub.add_parser("bell-scan", help="coincidence rate and visibility versus phi1 - phi2")
    p.add_argument("--n", type=float, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--dphi-steps", type=int, default=8)
    p.add_argument("--mc-count", type=int, default=0, help="add Monte Carlo columns when > 0")
    _add_mc_flags(p)
    p.add_argument("--out", required=True)

    p = sub.add_parser("detect", help="zeropoint-subtracted detection estimate")
    p.add_argument("--estimator", choices=("photon", "point", "coincidence"), required=True)
    _add_state_flags(p, SINGLE_STATES + ("two-mode",))
    p.add_argument("--phi1", type=float, default=0.0)
    p.add_argument("--phi2", type=float, default=0.0)
    p.add_argument("--t", type=float, default=0.0, help="detection time (point estimator)")
    _add_mc_flags(p)

    p = sub.add_parser("validate", help="run the oracle cross-check suite")
    _add_mc_flags(p, count=200_000)
    p.add_argument("--out", default=None, help="CSV report path")
    return parser


def _single_state(args) -> gaussian.SingleModeGaussian:
    return {
        "vacuum": gaussian.vacuum,
        "coherent": lambda: gaussian.coherent(args.a),
        "squeezed": lambda: gaussian.squeezed(args.a, args.s),
        "chaotic": lambda: gaussian.chaotic(args.n),
        "gaussian": lambda: gaussian.SingleModeGaussian(args.A, args.B, args.a),
    }[args.state]()


def _check_mc(args):
    if args.count < 2:
        raise ValueError(f"--count must be at least 2, got {args.count}")
    if args.threads < 1:
        raise ValueError(f"--threads must be at least 1, got {args.threads}")
    if args.chunk_size < 1:
        raise ValueError(f"--chunk-size must be at least 1, got {args.chunk_size}")


def cmd_classify(args):
    tag = gaussian.classify_two_mode(args.n, args.x)
    result = {"class": tag.value, "threshold": gaussian.classical_bound(args.n)}
    if abs(args.x) < 1 and not (args.n == 0 and args.x == 0):
        result["visibility"] = detection.coincidence_closed(args.n, args.x, 0.0).visibility
    return result, [], EXIT_OK


def cmd_wigner_grid(args):
    if args.steps < 2 or not args.extent > 0:
        raise ValueError("--steps must be >= 2 and --extent positive")
    axis = np.linspace(-args.extent, args.extent, args.steps)
    if args.state == "two-mode":
        state = gaussian.TwoModeWigner(args.n, args.x)
        ra, ia, rb, ib = np.meshgrid(axis, axis, axis, axis, indexing="ij")
        w = state(ra + 1j * ia, rb + 1j * ib)
        cols = np.column_stack([ra.ravel(), ia.ravel(), rb.ravel(), ib.ravel(), w.ravel()])
        header = "re_a,im_a,re_b,im_b,w"
    else:
        state = _single_state(args)
        re, im = np.meshgrid(axis, axis, indexing="ij")
        w = gaussian.gaussian_eval(state, re + 1j * im)
        cols = np.column_stack([re.ravel(), im.ravel(), w.ravel()])
        header = "re,im,w"
    lines = [header] + [",".join(fmt(v) for v in row) for row in cols]
    atomic_write_text(args.out, "\n".join(lines) + "\n")
    return {"rows": len(cols)}, [args.out], EXIT_OK


def cmd_sample(args):
    _check_mc(args)
    state = gaussian.TwoModeWigner(args.n, args.x, polarized=args.polarized)
    batch = sample_two_mode(state, args.count, args.seed, args.chunk_size, args.threads)
    batch.to_csv(args.out)
    return {"count": batch.count, "arity": batch.arity}, [args.out], EXIT_OK


def cmd_bell_scan(args):
    _check_mc(args)
    if args.dphi_steps < 1:
        raise ValueError("--dphi-steps must be at least 1")
    tag = gaussian.classify_two_mode(args.n, args.x).value
    state = gaussian.TwoModeWigner(args.n, args.x, polarized=True)
    header = "n,x,dphi,r12,visibility,class"
    if args.mc_count > 0:
        header += ",r12_mc,r12_mc_stderr"
    lines = [header]
    for k in range(args.dphi_steps):
        dphi = k * math.pi / args.dphi_steps
        res = detection.coincidence_closed(args.n, args.x, dphi)
        row = [fmt(args.n), fmt(args.x), fmt(dphi), fmt(res.r12), fmt(res.visibility), tag]
        if args.mc_count > 0:
            settings = (detection.PolarizerSetting(dphi), detection.PolarizerSetting(0.0))
            est = detection.coincidence_mc(state, settings, args.mc_count, args.seed + k,
                                           args.chunk_size, args.threads)
            row += [fmt(est.mean), fmt(est.std_error)]
        lines.append(",".join(row))
    atomic_write_text(args.out, "\n".join(lines) + "\n")
    return {"rows": args.dphi_steps, "class": tag}, [args.out], EXIT_OK


def cmd_detect(args):
    _check_mc(args)
    if args.estimator == "coincidence":
        state = gaussian.TwoModeWigner(args.n, args.x, polarized=True)
        settings = (detection.PolarizerSetting(args.phi1), detection.PolarizerSetting(args.phi2))
        est = detection.coincidence_mc(state, settings, args.count, args.seed,
                                       args.chunk_size, args.threads)
        closed = detection.coincidence_closed(args.n, args.x, args.phi1 - args.phi2).r12
    elif args.state == "two-mode":
        raise ValueError("photon and point estimators take a single-mode --state")
    elif args.estimator == "photon":
        state = _single_state(args)
        batch = sample_single_mode(state, args.count, args.seed, args.chunk_size, args.threads)
        est = detection.mc_rate(batch, 0)
        closed = detection.mean_rate(state)
    else:
        state = _single_state(args)
        modes = [detection.ModeSpec((0.0, 0.0, 1.0), (1.0, 0.0, 0.0))]
        est = detection.point_detector_rate([state], modes, (0.0, 0.0, 0.0), args.t, args.count,
                                            args.seed, chunk_size=args.chunk_size,
                                            threads=args.threads)
        closed = detection.point_detector_mean([state], modes, (0.0, 0.0, 0.0), args.t)
    return {**est.as_dict(), "closed_form": closed}, [], EXIT_OK


def cmd_validate(args):
    _check_mc(args)
    checks = validate.run_suite(args.count, args.seed, args.threads)
    if args.out:
        atomic_write_text(args.out, validate.report(checks))
    failed = [c.name for c in checks if not c.passed]
    result = {"checks": len(checks), "failed": failed}
    return result, [args.out] if args.out else [], EXIT_FAILED if failed else EXIT_OK


COMMANDS = {
    "classify": cmd_classify,
    "wigner-grid": cmd_wigner_grid,
    "sample": cmd_sample,
    "bell-scan": cmd_bell_scan,
    "detect": cmd_detect,
    "validate": cmd_validate,
}


def _jsonable(value):
    if isinstance(value, complex):
        return [value.real, value.imag]
    return value


def main(argv=None) -> int:
    start = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        for key, value in vars(args).items():
            if isinstance(value, (float, complex)) and not np.isfinite(value):
                raise ValueError(f"--{key.replace('_', '-')} must be finite")
        result, artifacts, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(str(exc).splitlines()[0], file=sys.stderr)
        return EXIT_BAD_INPUT
    except (ValueError, OverflowError, IndexError, TypeError) as exc:
        print(f"stochoptics: error: {exc}".splitlines()[0], file=sys.stderr)
        return EXIT_BAD_INPUT
    params = {k: _jsonable(v) for k, v in vars(args).items() if k != "command"}
    summary = {
        "command": args.command,
        "params": params,
        "result": result,
        "artifacts": artifacts,
        "elapsed_ms": round(1000 * (time.perf_counter() - start), 3),
    }
    print(json.dumps(summary))
    return code


if __name__ == "__main__":
    sys.exit(main())
