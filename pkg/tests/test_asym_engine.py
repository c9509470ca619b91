import numpy as np
import pytest

from asymotto.asym_engine import (
    eta_sc,
    eta_se,
    heat_hot_sc,
    heat_hot_se,
    outcome_sc,
    outcome_se,
    pwc_sc,
    pwc_se,
    work_sc,
    work_se,
)
from asymotto.cycle_core import BathPair, FrequencyPair, NotAnEngineError
from asymotto.high_temp import ht_efficiency, ht_work

COLD = BathPair(200.0, 100.0)
HOT_HT = BathPair(1e-4, 3.6e-5)


def test_equal_frequencies_give_zero_work():
    freq = FrequencyPair(1.5, 1.5)
    assert work_se(freq, BathPair(1.0, 0.3)) == 0.0
    assert work_sc(freq, BathPair(1.0, 0.3)) == 0.0
    assert pwc_se(freq, BathPair(1.0, 0.3)) and pwc_sc(freq, BathPair(1.0, 0.3))


def test_low_temperature_limits():
    freq = FrequencyPair(1.0, 2.0)
    assert work_se(freq, COLD) == pytest.approx(-0.125, rel=1e-6)
    assert work_sc(freq, COLD) == pytest.approx(-0.25, rel=1e-6)
    assert not pwc_se(freq, COLD) and not pwc_sc(freq, COLD)


def test_high_temperature_reduction():
    tau = HOT_HT.beta_h / HOT_HT.beta_c
    freq = FrequencyPair(0.8, 1.0)
    for work, scheme in ((work_se, "se"), (work_sc, "sc")):
        assert HOT_HT.beta_h * work(freq, HOT_HT) == pytest.approx(ht_work(scheme, 0.8, tau), rel=1e-3)
    assert eta_se(freq, HOT_HT) == pytest.approx(ht_efficiency("se", 0.8, tau), rel=1e-3)
    assert eta_sc(freq, HOT_HT) == pytest.approx(ht_efficiency("sc", 0.8, tau), rel=1e-3)


def test_high_temperature_pwc():
    z, tau = 0.8, 0.36
    bath = BathPair(1e-4, tau * 1e-4)
    freq = FrequencyPair(z, 1.0)
    assert pwc_se(freq, bath) == ((z * z + z) / 2 >= tau)
    assert pwc_sc(freq, bath) == (z >= (np.sqrt(tau * (8 + tau)) + tau) / 4)
    low = FrequencyPair(0.45, 1.0)
    assert not pwc_se(low, bath)


def test_sudden_expansion_efficiency_cross_check():
    freq, bath = FrequencyPair(1.0, 2.0), BathPair(1.0, 0.1)
    out = outcome_se(freq, bath)
    assert eta_se(freq, bath) == pytest.approx(out.w_ext / out.q_h, rel=1e-12)
    assert eta_se(freq, bath) == pytest.approx(1 + out.q_c / out.q_h, rel=1e-12)
    assert eta_se(freq, bath) <= 0.36


def test_consistency_with_generic_cycle():
    rng = np.random.default_rng(3)
    for _ in range(50):
        wc, wh = np.sort(rng.uniform(0.1, 20.0, 2))
        bh, bc = np.sort(rng.uniform(0.01, 5.0, 2))
        freq, bath = FrequencyPair(wc, wh), BathPair(bc, bh)
        se, sc = outcome_se(freq, bath), outcome_sc(freq, bath)
        assert work_se(freq, bath) == pytest.approx(se.w_ext, rel=1e-12, abs=1e-12)
        assert heat_hot_se(freq, bath) == pytest.approx(se.q_h, rel=1e-12, abs=1e-12)
        assert work_sc(freq, bath) == pytest.approx(sc.w_ext, rel=1e-12, abs=1e-12)
        assert heat_hot_sc(freq, bath) == pytest.approx(sc.q_h, rel=1e-12, abs=1e-12)


def test_sc_bound_at_reference_temperatures():
    rng = np.random.default_rng(11)
    w = np.sort(rng.uniform(0.0, 100.0, (20000, 2)), axis=1)
    freq = FrequencyPair(w[:, 0], w[:, 1])
    bath = BathPair(1.0, 0.1)
    engine = (work_sc(freq, bath) > 0) & (heat_hot_sc(freq, bath) > 0)
    sub = FrequencyPair(w[engine, 0], w[engine, 1])
    assert np.all(eta_sc(sub, bath) <= 0.539)


def test_efficiency_outside_engine_raises():
    with pytest.raises(NotAnEngineError):
        eta_se(FrequencyPair(1.0, 2.0), COLD)
    with pytest.raises(NotAnEngineError):
        eta_sc(FrequencyPair(1.0, 2.0), COLD)
