import math

import pytest

from asymotto.adiabaticity import (
    ConvergenceError,
    FrequencyProtocol,
    IntegratorConfig,
    constant_protocol,
    exponential_ramp,
    lambda_numeric,
    lambda_sudden,
    linear_ramp,
    sudden_step,
)

FAST = IntegratorConfig(step_count=2000)


@pytest.mark.parametrize("a,b,expected", [(1.0, 1.0, 1.0), (1.0, 2.0, 1.25), (2.0, 1.0, 1.25)])
def test_sudden_formula(a, b, expected):
    assert lambda_sudden(a, b) == expected


@pytest.mark.parametrize("duration", [1e-3, 1.0, 37.5])
def test_constant_frequency(duration):
    assert lambda_numeric(constant_protocol(1.7, duration), FAST) == pytest.approx(1.0, abs=1e-8)


def test_sudden_and_adiabatic_limits():
    assert lambda_numeric(linear_ramp(1.0, 2.0, 1e-4)) == pytest.approx(1.25, abs=1e-3)
    assert lambda_numeric(linear_ramp(1.0, 2.0, 1e3)) == pytest.approx(1.0, abs=1e-3)


def test_step_protocol_matches_quench():
    # a jump after a constant stretch still gives the instantaneous value
    assert lambda_numeric(sudden_step(1.0, 3.0, 2.0), FAST) == pytest.approx(lambda_sudden(1.0, 3.0), abs=1e-8)


@pytest.mark.parametrize("ramp", [linear_ramp, exponential_ramp])
def test_lambda_never_below_one(ramp):
    for duration in (0.05, 0.5, 2.0, 8.0):
        for wi, wf in ((1.0, 2.0), (2.0, 1.0), (0.5, 3.0)):
            assert lambda_numeric(ramp(wi, wf, duration), FAST) >= 1.0 - 1e-9


def test_approach_to_sudden_limit_is_monotone():
    durations = [0.8, 0.4, 0.2, 0.1, 0.05]
    gaps = [abs(lambda_numeric(linear_ramp(1.0, 2.0, d), FAST) - 1.25) for d in durations]
    assert all(a > b for a, b in zip(gaps, gaps[1:]))


def test_non_convergence_is_reported():
    with pytest.raises(ConvergenceError) as info:
        lambda_numeric(linear_ramp(1.0, 2.0, 10.0), IntegratorConfig(step_count=100))
    assert info.value.coarse != info.value.fine


def test_protocol_validation():
    with pytest.raises(ValueError):
        FrequencyProtocol(0.0, lambda t: 1.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        FrequencyProtocol(1.0, lambda t: 1.0, 1.0, 2.0)
    with pytest.raises(ValueError):
        constant_protocol(-1.0, 1.0)
    with pytest.raises(ValueError):
        IntegratorConfig(step_count=10)
    with pytest.raises(ValueError):
        IntegratorConfig(method="euler")


def test_unchecked_run_returns_coarse_value():
    value = lambda_numeric(linear_ramp(1.0, 2.0, 1.0), FAST, check_convergence=False)
    assert math.isfinite(value)
