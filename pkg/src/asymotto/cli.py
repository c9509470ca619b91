"""Command-line front end: every table the library can produce, as CSV or JSON.

Exit codes: 0 success, 1 a ``verify`` criterion failed, 2 invalid
parameters, 3 the lambda integration did not converge.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Iterable, Optional, Sequence

import numpy as np

from . import high_temp as ht
from .adiabaticity import (ConvergenceError, IntegratorConfig, RAMPS, constant_protocol,
                           lambda_numeric)
from .cycle_core import AdiabaticityPair, BathPair, FrequencyPair, heats_and_work
from .phase_map import phase_grid
from .verify_bounds import SamplingPlan, histogram_csv, histogram_json, sample_efficiencies

EXIT_OK, EXIT_FAILED, EXIT_INVALID, EXIT_NONCONVERGED = 0, 1, 2, 3
FLOAT_FORMAT = ".12g"


def fmt(x) -> str:
    """12-significant-digit rendering; ``None`` and NaN become an empty field."""
    if x is None:
        return ""
    if isinstance(x, (float, np.floating)):
        return "" if math.isnan(x) else format(float(x) + 0.0, FLOAT_FORMAT)
    return str(x)


def _json_value(x):
    if isinstance(x, (float, np.floating)):
        return None if math.isnan(x) else float(format(float(x) + 0.0, FLOAT_FORMAT))
    return x


def render(header: Sequence[str], rows: Iterable[Sequence], out_format: str) -> str:
    if out_format == "json":
        records = [{k: _json_value(v) for k, v in zip(header, row)} for row in rows]
        return json.dumps(records, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(v) for v in row])
    return buf.getvalue()


def _lambdas(scheme: str, freq: FrequencyPair, lab: Optional[float], lcd: Optional[float]):
    base = {
        "ad": AdiabaticityPair.adiabatic,
        "se": AdiabaticityPair.sudden_expansion,
        "sc": AdiabaticityPair.sudden_compression,
        "ss": AdiabaticityPair.sudden_switch,
    }[scheme]
    lam = base() if scheme == "ad" else base(freq)
    return AdiabaticityPair(lam.lambda_ab if lab is None else lab,
                            lam.lambda_cd if lcd is None else lcd)


def cmd_compute(args) -> str:
    freq = FrequencyPair(args.wc, args.wh)
    bath = BathPair(args.bc, args.bh)
    out = heats_and_work(freq, bath, _lambdas(args.scheme, freq, args.lab, args.lcd))
    fields = {"w": out.w_ext, "qh": out.q_h, "qc": out.q_c, "eta": out.eta,
              "mode": out.mode.value}
    if args.format == "json":
        return json.dumps({k: _json_value(v) for k, v in fields.items()}, indent=2) + "\n"
    return render(list(fields), [list(fields.values())], "csv")


def _grid(lo: float, hi: float, n: int) -> np.ndarray:
    if n < 1:
        raise ValueError("resolution must be >= 1")
    if not lo <= hi:
        raise ValueError("range must satisfy min <= max")
    return np.linspace(lo, hi, n)


def cmd_sweep(args) -> str:
    tau = ht.ReducedParams(1.0, args.tau).tau
    z = _grid(args.z_min, args.z_max, args.res)
    if z[0] <= 0 or z[-1] > 1:
        raise ValueError("z range must lie in (0, 1]")
    cols = [z]
    cols += [ht.ht_work(s, z, tau) for s in ("ad", "se", "sc", "ss")]
    cols += [ht.ht_efficiency(s, z, tau) for s in ("se", "sc", "ss")]
    header = ["z", "w_ad", "w_se", "w_sc", "w_ss", "eta_se", "eta_sc", "eta_ss"]
    rows = zip(*(np.asarray(c, dtype=float).tolist() for c in cols))
    return render(header, rows, args.format)


def cmd_bounds(args) -> str:
    taus = _grid(args.tau_min, args.tau_max, args.res)
    rows = []
    for tau in taus.tolist():
        eta_c = 1.0 - tau
        up_se, up_sc = ht.eta_up_se(tau), ht.eta_up_sc(tau)
        mw_se, mw_sc = ht.eta_mw_se(eta_c), ht.eta_mw_sc(eta_c)
        rows.append([tau, eta_c, up_se, mw_se, up_sc, mw_sc, up_se - mw_se, up_sc - mw_sc])
    header = ["tau", "eta_c", "eta_up_se", "eta_mw_se", "eta_up_sc", "eta_mw_sc",
              "delta", "delta_prime"]
    return render(header, rows, args.format)


def cmd_phase(args) -> str:
    grid = phase_grid(args.scheme, resolution=args.res)
    if args.format == "csv":
        return grid.to_csv(FLOAT_FORMAT)
    return render(["tau", "z", "mode"], grid.rows(), "json")


def cmd_histogram(args) -> str:
    plan = SamplingPlan(args.scheme, beta_c=args.bc, beta_h=args.bh, omega_max=args.wmax,
                        n_samples=args.n, seed=args.seed, bin_width=args.bin_width)
    hist = sample_efficiencies(plan, workers=args.threads)
    if args.format == "json":
        return histogram_json(hist, plan.bound)
    return histogram_csv(hist, plan.bound)


def cmd_lambda(args) -> str:
    if args.ramp == "constant":
        protocol = constant_protocol(args.wi, args.duration)
    else:
        protocol = RAMPS[args.ramp](args.wi, args.wf, args.duration)
    value = lambda_numeric(protocol, IntegratorConfig(step_count=args.steps))
    return render(["ramp", "wi", "wf", "duration", "lambda"],
                  [[args.ramp, args.wi, protocol.omega_end, args.duration, value]], args.format)


def cmd_verify(args) -> str:
    from .acceptance import run_all

    results = run_all()
    args.failed = not all(r.passed for r in results)
    if args.format == "json":
        return json.dumps([{"criterion": r.number, "title": r.title, "passed": r.passed,
                            "detail": r.detail} for r in results], indent=2) + "\n"
    return "".join(r.line() + "\n" for r in results)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="asymotto", description="Asymmetric harmonic quantum Otto cycles.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, default_format="csv"):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("csv", "json"), default=default_format)
        p.add_argument("--output", "-o", help="write to this path instead of stdout")
        p.set_defaults(func=func)
        return p

    p = add("compute", cmd_compute, "heats, work and efficiency of one cycle", "json")
    p.add_argument("--scheme", choices=("ad", "se", "sc", "ss"), default="se")
    p.add_argument("--wc", type=float, required=True)
    p.add_argument("--wh", type=float, required=True)
    p.add_argument("--bc", type=float, required=True)
    p.add_argument("--bh", type=float, required=True)
    p.add_argument("--lab", type=float, help="override the compression-stroke lambda")
    p.add_argument("--lcd", type=float, help="override the expansion-stroke lambda")

    p = add("sweep", cmd_sweep, "high-temperature work and efficiency versus z")
    p.add_argument("--tau", type=float, required=True)
    p.add_argument("--z-min", type=float, default=0.01)
    p.add_argument("--z-max", type=float, default=1.0)
    p.add_argument("--res", type=int, default=1000)

    p = add("bounds", cmd_bounds, "efficiency bounds versus Carnot efficiency")
    p.add_argument("--tau-min", type=float, default=0.01)
    p.add_argument("--tau-max", type=float, default=1.0)
    p.add_argument("--res", type=int, default=100)

    p = add("phase", cmd_phase, "operational-mode raster over (tau, z)")
    p.add_argument("--scheme", choices=("se", "sc"), required=True)
    p.add_argument("--res", type=int, default=500)

    p = add("histogram", cmd_histogram, "Monte-Carlo efficiency histogram")
    p.add_argument("--scheme", choices=("se", "sc"), required=True)
    p.add_argument("--bc", type=float, default=1.0)
    p.add_argument("--bh", type=float, default=0.1)
    p.add_argument("--n", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--wmax", type=float, default=100.0)
    p.add_argument("--bin-width", type=float, default=0.01)
    p.add_argument("--threads", type=int, default=None,
                   help="worker threads (default: $ASYMOTTO_THREADS or 1)")

    p = add("lambda", cmd_lambda, "adiabaticity parameter of a frequency ramp")
    p.add_argument("--ramp", choices=(*RAMPS, "constant"), default="linear")
    p.add_argument("--wi", type=float, required=True)
    p.add_argument("--wf", type=float, default=None)
    p.add_argument("--duration", type=float, required=True)
    p.add_argument("--steps", type=int, default=IntegratorConfig().step_count)

    add("verify", cmd_verify, "run the acceptance criteria")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    if args.command == "lambda" and args.ramp != "constant" and args.wf is None:
        print("asymotto: error: --wf is required for this ramp", file=sys.stderr)
        return EXIT_INVALID
    args.failed = False
    try:
        text = args.func(args)
    except ConvergenceError as exc:
        print(f"asymotto: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGED
    except (ValueError, ZeroDivisionError) as exc:
        print(f"asymotto: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_FAILED if args.failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
