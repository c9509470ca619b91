"""Adiabaticity parameter of a work stroke from classical propagation.

For a frequency protocol omega(t) on [0, T] the classical equation
``x'' + omega(t)^2 x = 0`` is integrated for the two fundamental solutions
X (X(0)=0, X'(0)=1) and Y (Y(0)=1, Y'(0)=0).  With ``wi = omega(0)`` and
``wf = omega(T)``,

    lambda = [wi^2 (wf^2 X^2 + X'^2) + (wf^2 Y^2 + Y'^2)] / (2 wi wf)

evaluated at t = T.  lambda = 1 for quasi-static driving and
``(wi^2 + wf^2)/(2 wi wf)`` for an instantaneous quench.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .cycle_core import sudden_lambda

DEFAULT_STEPS = 100_000
CONVERGENCE_TOL = 1e-6


class ConvergenceError(RuntimeError):
    """The integrated lambda moved by more than the tolerance on refinement."""

    def __init__(self, coarse: float, fine: float):
        super().__init__(f"lambda not converged: {coarse!r} vs {fine!r} after doubling steps")
        self.coarse = coarse
        self.fine = fine


@dataclass(frozen=True)
class FrequencyProtocol:
    """A frequency ramp ``omega_of_t`` on ``[0, duration]``.

    ``breakpoints`` lists interior times where ``omega_of_t`` may jump; the
    integrator never straddles them.
    """

    duration: float
    omega_of_t: Callable[[float], float]
    omega_start: float
    omega_end: float
    breakpoints: Sequence[float] = field(default=())

    def __post_init__(self):
        if not (math.isfinite(self.duration) and self.duration > 0):
            raise ValueError("duration must be positive and finite")
        if self.omega_start <= 0 or self.omega_end <= 0:
            raise ValueError("endpoint frequencies must be positive")
        for t in self.breakpoints:
            if not 0.0 < t < self.duration:
                raise ValueError("breakpoints must lie strictly inside (0, duration)")
        for t, w in ((0.0, self.omega_start), (self.duration, self.omega_end)):
            if not math.isclose(self.omega_of_t(t), w, rel_tol=1e-12):
                raise ValueError(f"omega_of_t({t}) does not match the endpoint {w}")


@dataclass(frozen=True)
class IntegratorConfig:
    """Fixed-step classical fourth-order Runge-Kutta settings."""

    step_count: int = DEFAULT_STEPS
    method: str = "rk4"

    def __post_init__(self):
        if int(self.step_count) != self.step_count or self.step_count < 100:
            raise ValueError("step_count must be an integer >= 100")
        if self.method != "rk4":
            raise ValueError(f"unsupported method {self.method!r}")


def constant_protocol(omega: float, duration: float) -> FrequencyProtocol:
    return FrequencyProtocol(duration, lambda t: omega, omega, omega)


def linear_ramp(omega_start: float, omega_end: float, duration: float) -> FrequencyProtocol:
    slope = (omega_end - omega_start) / duration

    def omega(t):
        return omega_end if t >= duration else omega_start + slope * t

    return FrequencyProtocol(duration, omega, omega_start, omega_end)


def exponential_ramp(omega_start: float, omega_end: float, duration: float) -> FrequencyProtocol:
    rate = math.log(omega_end / omega_start) / duration

    def omega(t):
        return omega_end if t >= duration else omega_start * math.exp(rate * t)

    return FrequencyProtocol(duration, omega, omega_start, omega_end)


def sudden_step(omega_start: float, omega_end: float, duration: float,
                switch_fraction: float = 0.5) -> FrequencyProtocol:
    """Constant ``omega_start`` that jumps to ``omega_end`` partway through."""
    t_switch = switch_fraction * duration

    def omega(t):
        return omega_start if t < t_switch else omega_end

    return FrequencyProtocol(duration, omega, omega_start, omega_end, breakpoints=(t_switch,))


RAMPS = {
    "linear": linear_ramp,
    "exponential": exponential_ramp,
    "step": sudden_step,
}


def lambda_sudden(omega_c: float, omega_h: float) -> float:
    """Adiabaticity parameter of an instantaneous quench (symmetric in its arguments)."""
    return float(sudden_lambda(omega_c, omega_h))


def _propagate(protocol: FrequencyProtocol, n_steps: int):
    """RK4 for both fundamental solutions; returns ``(x, vx, y, vy)`` at T."""
    edges = [0.0, *sorted(protocol.breakpoints), protocol.duration]
    x, vx, y, vy = 0.0, 1.0, 1.0, 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        n = max(1, round(n_steps * (b - a) / protocol.duration))
        h = (b - a) / n
        # Segment endpoints are sampled just inside so jumps are one-sided.
        nudge = 1e-12 * (b - a)

        def w2(t):
            w = protocol.omega_of_t(min(max(t, a + nudge), b - nudge))
            return w * w

        t = a
        for i in range(n):
            t = a + i * h
            o1 = w2(t)
            o2 = w2(t + 0.5 * h)
            o4 = w2(t + h)
            # state derivative: (x, v)' = (v, -omega^2 x), same for y
            k1x, k1v = vx, -o1 * x
            k1y, k1w = vy, -o1 * y
            k2x, k2v = vx + 0.5 * h * k1v, -o2 * (x + 0.5 * h * k1x)
            k2y, k2w = vy + 0.5 * h * k1w, -o2 * (y + 0.5 * h * k1y)
            k3x, k3v = vx + 0.5 * h * k2v, -o2 * (x + 0.5 * h * k2x)
            k3y, k3w = vy + 0.5 * h * k2w, -o2 * (y + 0.5 * h * k2y)
            k4x, k4v = vx + h * k3v, -o4 * (x + h * k3x)
            k4y, k4w = vy + h * k3w, -o4 * (y + h * k3y)
            x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x)
            vx += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)
            y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y)
            vy += h / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w)
    return x, vx, y, vy


def _lambda_once(protocol: FrequencyProtocol, n_steps: int) -> float:
    wi, wf = protocol.omega_start, protocol.omega_end
    x, vx, y, vy = _propagate(protocol, n_steps)
    return (wi * wi * (wf * wf * x * x + vx * vx) + (wf * wf * y * y + vy * vy)) / (2.0 * wi * wf)


def lambda_numeric(protocol: FrequencyProtocol, cfg: IntegratorConfig = IntegratorConfig(),
                   check_convergence: bool = True) -> float:
    """Adiabaticity parameter of ``protocol`` by direct integration.

    With ``check_convergence`` the integration is repeated at twice the step
    count and :class:`ConvergenceError` is raised if the two results differ
    by more than 1e-6; the finer value is returned.
    """
    coarse = _lambda_once(protocol, cfg.step_count)
    if not check_convergence:
        return coarse
    fine = _lambda_once(protocol, 2 * cfg.step_count)
    if abs(fine - coarse) > CONVERGENCE_TOL:
        raise ConvergenceError(coarse, fine)
    return fine
