"""Monte-Carlo check of the all-temperature efficiency bounds.

Frequencies are drawn uniformly on ``[0, omega_max]^2`` and sorted so that
``omega_c <= omega_h``.  Only engine-mode draws (positive work and positive
heat from the hot bath) contribute an efficiency; the others are counted as
rejected.  Draws come in fixed-size chunks, each with its own Philox key
derived from ``(seed, chunk index)``, so a plan produces identical results
for any number of worker threads.
"""
from __future__ import annotations

import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .asym_engine import _eta_sc_raw, _eta_se_raw
from .cycle_core import coth
from .high_temp import Scheme, eta_up_sc, eta_up_se

CHUNK_SIZE = 1 << 16
THREADS_ENV = "ASYMOTTO_THREADS"


@dataclass(frozen=True)
class SamplingPlan:
    scheme: Scheme
    beta_c: float
    beta_h: float
    omega_max: float = 100.0
    n_samples: int = 1_000_000
    seed: int = 0
    bin_width: float = 0.01

    def __post_init__(self):
        object.__setattr__(self, "scheme", Scheme(self.scheme))
        if self.scheme not in (Scheme.SE, Scheme.SC):
            raise ValueError("sampling is defined for the 'se' and 'sc' schemes")
        if not 0 < self.beta_h <= self.beta_c:
            raise ValueError("need 0 < beta_h <= beta_c")
        if self.n_samples < 1:
            raise ValueError("n_samples must be >= 1")
        if not self.bin_width > 0:
            raise ValueError("bin_width must be positive")
        if not self.omega_max > 0:
            raise ValueError("omega_max must be positive")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    @property
    def tau(self) -> float:
        return self.beta_h / self.beta_c

    @property
    def bound(self) -> float:
        """High-temperature efficiency maximum at this plan's temperature ratio."""
        return eta_up_se(self.tau) if self.scheme is Scheme.SE else eta_up_sc(self.tau)

    @property
    def n_bins(self) -> int:
        return int(math.ceil(1.0 / self.bin_width - 1e-9))


@dataclass(frozen=True)
class Histogram:
    bins: list[tuple[float, float, int]]
    max_eta: Optional[float]
    accepted: int
    rejected: int

    def summary(self, bound: float) -> dict:
        margin = None if self.max_eta is None else bound - self.max_eta
        return {
            "max_eta": self.max_eta,
            "accepted": self.accepted,
            "rejected": self.rejected,
            "bound": bound,
            "margin": margin,
        }


def _chunk_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=seed + (index << 64)))


def chunk_efficiencies(plan: SamplingPlan, index: int) -> tuple[np.ndarray, int]:
    """Engine-mode efficiencies of one chunk and the number of draws in it."""
    start = index * CHUNK_SIZE
    size = min(CHUNK_SIZE, plan.n_samples - start)
    draws = _chunk_rng(plan.seed, index).random((size, 2)) * plan.omega_max
    wc = draws.min(axis=1)
    wh = draws.max(axis=1)
    valid = wc > 0
    wc, wh = wc[valid], wh[valid]
    cc = coth(plan.beta_c * wc / 2.0)
    ch = coth(plan.beta_h * wh / 2.0)
    if plan.scheme is Scheme.SE:
        w = (wh - wc) * ((wc + wh) * ch - 2.0 * wh * cc) / (4.0 * wh)
        q_h = 0.5 * wh * (ch - cc)
        engine = (w > 0) & (q_h > 0)
        eta = _eta_se_raw(wc[engine], wh[engine], cc[engine], ch[engine])
    else:
        w = (wc - wh) * ((wc + wh) * cc - 2.0 * wc * ch) / (4.0 * wc)
        q_h = (2.0 * wc * wh * ch - (wc * wc + wh * wh) * cc) / (4.0 * wc)
        engine = (w > 0) & (q_h > 0)
        eta = _eta_sc_raw(wc[engine], wh[engine], cc[engine], ch[engine])
    return eta, size


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def sample_efficiencies(plan: SamplingPlan, workers: Optional[int] = None) -> Histogram:
    n_chunks = -(-plan.n_samples // CHUNK_SIZE)
    n_bins = plan.n_bins
    workers = workers or default_workers()

    def run(index):
        eta, size = chunk_efficiencies(plan, index)
        idx = np.minimum((eta / plan.bin_width).astype(np.int64), n_bins - 1)
        counts = np.bincount(idx, minlength=n_bins)
        top = float(eta.max()) if eta.size else -math.inf
        return counts, top, eta.size, size

    if workers == 1:
        results = [run(i) for i in range(n_chunks)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, range(n_chunks)))

    counts = np.zeros(n_bins, dtype=np.int64)
    top, accepted, drawn = -math.inf, 0, 0
    for c, t, a, s in results:
        counts += c
        top = max(top, t)
        accepted += a
        drawn += s
    bins = [(k * plan.bin_width, (k + 1) * plan.bin_width, int(counts[k])) for k in range(n_bins)]
    return Histogram(
        bins=bins,
        max_eta=None if accepted == 0 else top,
        accepted=accepted,
        rejected=drawn - accepted,
    )


def _fmt(x, fmt=".12g"):
    return "" if x is None else format(x, fmt)


def histogram_csv(hist: Histogram, bound: float) -> str:
    lines = ["bin_lo,bin_hi,count"]
    lines += [f"{_fmt(lo)},{_fmt(hi)},{n}" for lo, hi, n in hist.bins]
    s = hist.summary(bound)
    lines.append("# " + ",".join(
        f"{k}={_fmt(v) if v is None or isinstance(v, float) else v}" for k, v in s.items()))
    return "\n".join(lines) + "\n"


def histogram_json(hist: Histogram, bound: float) -> str:
    s = {k: (float(format(v, ".12g")) if isinstance(v, float) else v)
         for k, v in hist.summary(bound).items()}
    return json.dumps(s, indent=2) + "\n"
