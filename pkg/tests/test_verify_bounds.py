import json

import numpy as np
import pytest

from asymotto.high_temp import eta_up_sc, eta_up_se
from asymotto.verify_bounds import (
    CHUNK_SIZE,
    SamplingPlan,
    THREADS_ENV,
    default_workers,
    histogram_csv,
    histogram_json,
    sample_efficiencies,
)


def plan(scheme="se", **kw):
    base = dict(beta_c=1.0, beta_h=0.1, omega_max=100.0, n_samples=200_000, seed=0, bin_width=0.01)
    base.update(kw)
    return SamplingPlan(scheme, **base)


@pytest.mark.parametrize("scheme,bound", [("se", 0.36), ("sc", 0.539)])
def test_reference_bounds_hold(scheme, bound):
    p = plan(scheme, n_samples=1_000_000, seed=3)
    hist = sample_efficiencies(p)
    assert hist.max_eta < bound
    assert hist.max_eta <= p.bound
    assert 0 < hist.accepted < p.n_samples


def test_plan_bound_uses_temperature_ratio():
    assert plan("se").bound == pytest.approx(eta_up_se(0.1))
    assert plan("sc").bound == pytest.approx(eta_up_sc(0.1))


def test_seed_determinism_and_thread_independence():
    p = plan(n_samples=3 * CHUNK_SIZE + 17)
    one, four = sample_efficiencies(p, workers=1), sample_efficiencies(p, workers=4)
    assert one == four
    assert sample_efficiencies(p) == one


def test_different_seeds_differ():
    assert sample_efficiencies(plan(seed=1)).bins != sample_efficiencies(plan(seed=2)).bins


def test_single_draw():
    p = plan(n_samples=1, seed=42)
    h = sample_efficiencies(p)
    assert h.accepted + h.rejected == 1
    assert h == sample_efficiencies(p)


def test_counts_add_up():
    h = sample_efficiencies(plan())
    assert sum(n for _, _, n in h.bins) == h.accepted
    assert h.accepted + h.rejected == 200_000
    assert len(h.bins) == 100
    assert h.bins[0][0] == 0.0 and h.bins[-1][1] == pytest.approx(1.0)


def test_serialization():
    p = plan(n_samples=5000)
    h = sample_efficiencies(p)
    text = histogram_csv(h, p.bound)
    lines = text.splitlines()
    assert lines[0] == "bin_lo,bin_hi,count"
    assert lines[-1].startswith("# max_eta=")
    assert len(lines) == 2 + len(h.bins)
    data = json.loads(histogram_json(h, p.bound))
    assert data["accepted"] == h.accepted
    assert data["margin"] == pytest.approx(p.bound - h.max_eta, abs=1e-11)


def test_empty_histogram_summary():
    p = plan(beta_c=1.0, beta_h=1.0, n_samples=1000)
    h = sample_efficiencies(p)
    assert h.accepted == 0 and h.max_eta is None
    assert "max_eta=," in histogram_csv(h, p.bound)


@pytest.mark.parametrize("kw", [
    dict(beta_h=2.0),
    dict(n_samples=0),
    dict(bin_width=0.0),
    dict(omega_max=-1.0),
    dict(seed=-1),
])
def test_plan_validation(kw):
    with pytest.raises(ValueError):
        plan(**kw)
    with pytest.raises(ValueError):
        SamplingPlan("ad", 1.0, 0.1)


def test_thread_env(monkeypatch):
    monkeypatch.setenv(THREADS_ENV, "3")
    assert default_workers() == 3
    monkeypatch.setenv(THREADS_ENV, "many")
    assert default_workers() == 1
    monkeypatch.delenv(THREADS_ENV)
    assert default_workers() == 1
