"""Acceptance criteria for the package, runnable from pytest or the CLI.

Each ``criterion_N`` function returns a :class:`CriterionResult`; tolerances
are fixed here and nowhere else.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import high_temp as ht
from .adiabaticity import constant_protocol, lambda_numeric, linear_ramp
from .asym_engine import eta_se, heat_hot_se, work_sc, work_se
from .cubic import CubicCoefficients, cubic_real_roots
from .cycle_core import BathPair, FrequencyPair, OperationalMode
from .oracles import leading_coefficient, refined_max, sign_change_crossing
from .phase_map import MODE_CODES, FORBIDDEN, boundary_distance, phase_grid, region_mode
from .verify_bounds import SamplingPlan, sample_efficiencies


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number}. {self.title}: {self.detail} ({self.seconds:.2f} s)"


def _timed(number: int, title: str):
    def wrap(fn: Callable[[], tuple[bool, str]]):
        def run() -> CriterionResult:
            t0 = time.perf_counter()
            passed, detail = fn()
            return CriterionResult(number, title, bool(passed), detail, time.perf_counter() - t0)
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return wrap


@_timed(1, "bound values at tau = 0.1")
def criterion_1():
    se, sc = ht.eta_up_se(0.1), ht.eta_up_sc(0.1)
    ok = abs(se - 0.36) <= 5e-3 and abs(sc - 0.54) <= 1e-2
    return ok, f"eta_up_se={se:.6f} (0.36 +/- 5e-3), eta_up_sc={sc:.6f} (0.54 +/- 1e-2)"


@_timed(2, "leading Taylor coefficients")
def criterion_2():
    expected = {
        ht.TaylorCurve.UP_SE: 2.0 - math.sqrt(3.0),
        ht.TaylorCurve.MW_SE: 0.25,
        ht.TaylorCurve.MW_SC: 0.25,
        ht.TaylorCurve.UP_SC: 2.0 - math.sqrt(3.0),
    }
    worst = 0.0
    for curve, c1 in expected.items():
        numeric = leading_coefficient(ht.curve_function(curve), h=1e-4)
        worst = max(worst, abs(numeric - c1) / c1)
    return worst <= 1e-4, f"max relative error {worst:.2e} (tol 1e-4, h <= 1e-4)"


@_timed(3, "intersection identities at tau = 0.36")
def criterion_3():
    tau = 0.36
    z = np.linspace(1e-3, 1.0, 10_000)
    w_se, w_sc = ht.ht_work("se", z, tau), ht.ht_work("sc", z, tau)
    z_cross = sign_change_crossing(z, w_se - w_sc)
    w_at = float(ht.ht_work("se", z_cross, tau))
    w_at_sc = float(ht.ht_work("sc", z_cross, tau))
    target_w = (1.0 - math.sqrt(tau)) ** 2 / 2.0

    e_se, e_sc = ht.ht_efficiency("se", z, tau), ht.ht_efficiency("sc", z, tau)
    both = np.isfinite(e_se) & np.isfinite(e_sc)
    z_eff = sign_change_crossing(z[both], (e_se - e_sc)[both])
    eta_cross = float(ht.ht_efficiency("se", z_eff, tau))
    ss_max = float(np.nanmax(ht.ht_efficiency("ss", z, tau)))

    peak_se = float(z[np.argmax(w_se)])
    peak_sc = float(z[np.argmax(w_sc)])
    checks = [
        abs(z_cross - 0.6) <= 1e-3,
        abs(w_at - target_w) <= 1e-3 and abs(w_at_sc - target_w) <= 1e-3,
        abs(eta_cross - 0.158) <= 1e-3,
        abs(eta_cross - ss_max) <= 1e-3,
        abs(peak_se - 0.711) <= 1e-3 and abs(peak_sc - 0.711) <= 1e-3,
    ]
    detail = (f"work cross z={z_cross:.5f} W={w_at:.5f}; eff cross eta={eta_cross:.5f} "
              f"(SS max {ss_max:.5f}); peaks z={peak_se:.4f}/{peak_sc:.4f}")
    return all(checks), detail


@_timed(4, "closed-form optima vs numerical maximization; cubic roots")
def criterion_4():
    taus = np.linspace(0.01, 0.99, 202)[1:-1]
    worst = 0.0
    for tau in taus:
        for scheme, closed in (("se", ht.eta_up_se), ("sc", ht.eta_up_sc)):
            _, best = refined_max(lambda zz: ht.ht_efficiency(scheme, zz, tau), 1e-6, 1.0)
            worst = max(worst, abs(closed(float(tau)) - best))

    rng = np.random.default_rng(2024)
    worst_res, mismatches = 0.0, 0
    for a, b, c, d in rng.standard_normal((10_000, 4)):
        cub = CubicCoefficients(float(a), float(b), float(c), float(d))
        roots = cubic_real_roots(cub)
        for r in roots:
            worst_res = max(worst_res, abs(cub(r)) / cub.scale(r))
        disc = cub.discriminant
        expected = 3 if disc > 0 else 1
        if len(roots) != expected or (disc > 0 and len(set(roots)) != 3):
            mismatches += 1
    ok = worst <= 1e-8 and worst_res <= 1e-10 and mismatches == 0
    return ok, (f"optimum gap {worst:.2e} over {len(taus)} tau (tol 1e-8); "
                f"cubic residual {worst_res:.2e} (tol 1e-10), count mismatches {mismatches}")


@_timed(5, "Monte-Carlo bound satisfaction")
def criterion_5():
    limits = {"se": 0.36, "sc": 0.539}
    seeds = range(10)
    worst = {}
    for scheme, limit in limits.items():
        tops = []
        for seed in seeds:
            plan = SamplingPlan(scheme, beta_c=1.0, beta_h=0.1, omega_max=100.0,
                                n_samples=1_000_000, seed=seed, bin_width=0.01)
            tops.append(sample_efficiencies(plan).max_eta)
        worst[scheme] = max(tops)
    ok = all(worst[s] <= limits[s] for s in limits)
    return ok, (f"max eta_SE={worst['se']:.5f} (<= 0.36), max eta_SC={worst['sc']:.5f} "
                f"(<= 0.539) over {len(seeds)} seeds x 1e6")


@_timed(6, "low-temperature exclusion")
def criterion_6():
    rng = np.random.default_rng(6)
    n = 10_000
    beta_c = rng.uniform(0.5, 10.0, n)
    beta_h = beta_c * rng.uniform(0.01, 1.0, n)
    omega_c = rng.uniform(50.0, 500.0, n) / beta_c
    omega_h = np.maximum(omega_c, 50.0 / beta_h) * (1.0 + rng.uniform(1e-6, 2.0, n))
    freq, bath = FrequencyPair(omega_c, omega_h), BathPair(beta_c, beta_h)
    assert np.all(beta_c * omega_c >= 50) and np.all(beta_h * omega_h >= 50)
    n_se = int(np.count_nonzero(work_se(freq, bath) >= 0))
    n_sc = int(np.count_nonzero(work_sc(freq, bath) >= 0))
    return n_se == 0 and n_sc == 0, f"{n} samples: non-negative W_SE {n_se}, W_SC {n_sc}"


@_timed(7, "universal sudden-expansion bound")
def criterion_7():
    rng = np.random.default_rng(7)
    target, collected, top = 100_000, 0, 0.0
    while collected < target:
        m = 200_000
        beta_c = rng.uniform(0.01, 10.0, m)
        beta_h = beta_c * rng.uniform(0.0, 1.0, m)
        w = rng.uniform(0.0, 100.0, (m, 2))
        keep = (beta_h > 0) & (w.min(axis=1) > 0)
        freq = FrequencyPair(w.min(axis=1)[keep], w.max(axis=1)[keep])
        bath = BathPair(beta_c[keep], beta_h[keep])
        engine = (work_se(freq, bath) > 0) & (heat_hot_se(freq, bath) > 0)
        idx = np.nonzero(engine)[0][: target - collected]
        etas = eta_se(FrequencyPair(freq.omega_c[idx], freq.omega_h[idx]),
                      BathPair(bath.beta_c[idx], bath.beta_h[idx]))
        top = max(top, float(np.max(etas)))
        collected += idx.size
    return top < 0.5, f"{collected} engine samples, max eta_SE={top:.5f} (< 0.5)"


@_timed(8, "phase-map equivalence")
def criterion_8():
    grids = {s: phase_grid(s, resolution=1000) for s in ("se", "sc")}
    mismatches, forbidden = 0, 0
    for scheme, g in grids.items():
        tau, z = np.meshgrid(g.tau_axis, g.z_axis, indexing="ij")
        check = (g.cells != MODE_CODES[OperationalMode.BOUNDARY]) & (
            boundary_distance(scheme, tau, z) > 1e-9)
        mismatches += int(np.count_nonzero(region_mode(scheme, tau, z)[check] != g.cells[check]))
        forbidden += int(np.count_nonzero(g.cells == FORBIDDEN))
    sc = grids["sc"]
    tau, z = np.meshgrid(sc.tau_axis, sc.z_axis, indexing="ij")
    fridge = sc.cells == MODE_CODES[OperationalMode.REFRIGERATOR]
    off_diag = np.abs(z - tau) > 1e-9
    fridge_is_lower_half = bool(np.all(fridge[off_diag] == (z < tau)[off_diag]))
    fridge_share = sc.fraction(OperationalMode.REFRIGERATOR)
    middle = (OperationalMode.HEATER, OperationalMode.ACCELERATOR)
    se_mid, sc_mid = grids["se"].fraction(*middle), sc.fraction(*middle)
    ok = (mismatches == 0 and forbidden == 0 and fridge_is_lower_half
          and abs(fridge_share - 0.5) <= 1e-3 and sc_mid < se_mid)
    return ok, (f"mismatches {mismatches}, forbidden {forbidden}, SC fridge share "
                f"{fridge_share:.4f}, heater+accelerator SE {se_mid:.4f} > SC {sc_mid:.4f}")


@_timed(9, "adiabaticity oracle limits")
def criterion_9():
    fast = lambda_numeric(linear_ramp(1.0, 2.0, 1e-4))
    slow = lambda_numeric(linear_ramp(1.0, 2.0, 1e3))
    const = lambda_numeric(constant_protocol(1.0, 10.0))
    ok = abs(fast - 1.25) <= 1e-3 and abs(slow - 1.0) <= 1e-3 and abs(const - 1.0) <= 1e-8
    return ok, f"sudden {fast:.6f} (1.25), slow {slow:.6f} (1), constant {const:.10f} (1)"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


def run_all(echo: Callable[[str], None] | None = None) -> list[CriterionResult]:
    results = []
    for crit in CRITERIA:
        res = crit()
        if echo is not None:
            echo(res.line())
        results.append(res)
    return results
