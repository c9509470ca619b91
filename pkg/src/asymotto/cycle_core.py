"""Finite-temperature thermodynamics of a single harmonic Otto cycle.

Units are hbar = k_B = 1.  The cycle runs A -> B (compression, omega_c ->
omega_h), B -> C (hot isochore), C -> D (expansion, omega_h -> omega_c) and
D -> A (cold isochore).  Heat and work fluxes entering the working medium are
positive, so the extracted work is ``w_ext = q_h + q_c``.

All numeric routines accept scalars or numpy arrays (broadcast together);
the dataclass wrappers validate their fields with the same rules either way.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

# coth(x) == 1.0 in double precision once 2*exp(-2x) < eps/2.
_COTH_SATURATION = 40.0
# Numerically computed adiabaticity parameters may dip a hair below 1.
_LAMBDA_SLACK = 1e-9
# Sign tolerance below which a flux counts as zero for mode labelling.
BOUNDARY_TOL = 1e-12


class NotAnEngineError(ValueError):
    """Raised when an efficiency is requested outside engine operation."""


def coth(x):
    """Hyperbolic cotangent, stable at both ends of the temperature scale.

    Uses ``1 + 2/expm1(2x)`` which keeps full relative accuracy for small
    arguments and saturates to exactly 1 above ``x = 40`` instead of
    overflowing.
    """
    x = np.asarray(x, dtype=float)
    with np.errstate(over="ignore", divide="ignore"):
        out = np.where(
            np.abs(x) > _COTH_SATURATION,
            np.sign(x),
            1.0 + 2.0 / np.expm1(2.0 * np.clip(x, -_COTH_SATURATION, _COTH_SATURATION)),
        )
    return out[()] if out.ndim == 0 else out


def _finite(name, value):
    arr = np.asarray(value, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return arr


@dataclass(frozen=True)
class BathPair:
    """Inverse temperatures of the cold and hot reservoirs."""

    beta_c: float
    beta_h: float

    def __post_init__(self):
        bc = _finite("beta_c", self.beta_c)
        bh = _finite("beta_h", self.beta_h)
        if np.any(bc <= 0) or np.any(bh <= 0):
            raise ValueError("inverse temperatures must be positive")
        if np.any(bh > bc):
            raise ValueError("beta_h must not exceed beta_c (hot bath is hotter)")

    @property
    def tau(self):
        """Temperature ratio beta_h / beta_c in (0, 1]."""
        return np.asarray(self.beta_h) / np.asarray(self.beta_c)

    @property
    def eta_carnot(self):
        return 1.0 - self.tau


@dataclass(frozen=True)
class FrequencyPair:
    """Oscillator frequencies on the cold and hot isochores."""

    omega_c: float
    omega_h: float

    def __post_init__(self):
        wc = _finite("omega_c", self.omega_c)
        wh = _finite("omega_h", self.omega_h)
        if np.any(wc <= 0):
            raise ValueError("omega_c must be positive")
        if np.any(wc > wh):
            raise ValueError("omega_c must not exceed omega_h")

    @property
    def z(self):
        """Compression ratio omega_c / omega_h in (0, 1]."""
        return np.asarray(self.omega_c) / np.asarray(self.omega_h)


@dataclass(frozen=True)
class AdiabaticityPair:
    """Adiabaticity parameters of the compression and expansion strokes."""

    lambda_ab: float = 1.0
    lambda_cd: float = 1.0

    def __post_init__(self):
        for name in ("lambda_ab", "lambda_cd"):
            val = _finite(name, getattr(self, name))
            if np.any(val < 1.0 - _LAMBDA_SLACK):
                raise ValueError(f"{name} must be >= 1, got {getattr(self, name)!r}")

    @classmethod
    def adiabatic(cls) -> "AdiabaticityPair":
        return cls(1.0, 1.0)

    @classmethod
    def sudden_expansion(cls, freq: FrequencyPair) -> "AdiabaticityPair":
        return cls(1.0, sudden_lambda(freq.omega_c, freq.omega_h))

    @classmethod
    def sudden_compression(cls, freq: FrequencyPair) -> "AdiabaticityPair":
        return cls(sudden_lambda(freq.omega_c, freq.omega_h), 1.0)

    @classmethod
    def sudden_switch(cls, freq: FrequencyPair) -> "AdiabaticityPair":
        lam = sudden_lambda(freq.omega_c, freq.omega_h)
        return cls(lam, lam)


def sudden_lambda(omega_1, omega_2):
    """Adiabaticity parameter of an instantaneous quench omega_1 -> omega_2."""
    w1 = np.asarray(omega_1, dtype=float)
    w2 = np.asarray(omega_2, dtype=float)
    out = (w1 * w1 + w2 * w2) / (2.0 * w1 * w2)
    return out[()] if np.ndim(out) == 0 else out


@dataclass(frozen=True)
class StrokeEnergies:
    """Mean oscillator energy at the four corners of the cycle."""

    h_a: float
    h_b: float
    h_c: float
    h_d: float


class OperationalMode(str, enum.Enum):
    ENGINE = "engine"
    REFRIGERATOR = "refrigerator"
    HEATER = "heater"
    ACCELERATOR = "accelerator"
    BOUNDARY = "boundary"


def mode_from_signs(w_ext: float, q_h: float, q_c: float,
                    tol: float = BOUNDARY_TOL) -> OperationalMode:
    """Label a cycle by the signs of its work and heat fluxes.

    Any flux within ``tol`` of zero yields ``BOUNDARY``.  Sign triples that
    no thermal machine can produce raise ``ValueError``.
    """
    if min(abs(w_ext), abs(q_h), abs(q_c)) <= tol:
        return OperationalMode.BOUNDARY
    if w_ext > 0 and q_h > 0 and q_c < 0:
        return OperationalMode.ENGINE
    if w_ext < 0 and q_h < 0 and q_c > 0:
        return OperationalMode.REFRIGERATOR
    if w_ext < 0 and q_h < 0 and q_c < 0:
        return OperationalMode.HEATER
    if w_ext < 0 and q_h > 0 and q_c < 0:
        return OperationalMode.ACCELERATOR
    raise ValueError(f"forbidden sign combination w={w_ext}, q_h={q_h}, q_c={q_c}")


@dataclass(frozen=True)
class CycleOutcome:
    q_h: float
    q_c: float
    w_ext: float
    eta: Optional[float] = None

    @property
    def is_engine(self) -> bool:
        return bool(self.w_ext > 0 and self.q_h > 0)

    @property
    def mode(self) -> OperationalMode:
        return mode_from_signs(self.w_ext, self.q_h, self.q_c)


def stroke_energies(freq: FrequencyPair, bath: BathPair,
                    lam: AdiabaticityPair) -> StrokeEnergies:
    c_cold = coth(np.asarray(bath.beta_c) * freq.omega_c / 2.0)
    c_hot = coth(np.asarray(bath.beta_h) * freq.omega_h / 2.0)
    return StrokeEnergies(
        h_a=0.5 * freq.omega_c * c_cold,
        h_b=0.5 * freq.omega_h * lam.lambda_ab * c_cold,
        h_c=0.5 * freq.omega_h * c_hot,
        h_d=0.5 * freq.omega_c * lam.lambda_cd * c_hot,
    )


def cycle_heats(freq: FrequencyPair, bath: BathPair, lam: AdiabaticityPair):
    """Return ``(q_h, q_c)``; works elementwise on array-valued inputs.

    Factored as ``h_c - h_b = omega_h (c_h - lambda_ab c_c) / 2`` so that the
    adiabatic heat ratio is exactly ``-omega_c / omega_h`` in floating point.
    """
    c_cold = coth(np.asarray(bath.beta_c) * freq.omega_c / 2.0)
    c_hot = coth(np.asarray(bath.beta_h) * freq.omega_h / 2.0)
    q_h = 0.5 * freq.omega_h * (c_hot - lam.lambda_ab * c_cold)
    q_c = 0.5 * freq.omega_c * (c_cold - lam.lambda_cd * c_hot)
    return q_h, q_c


def heats_and_work(freq: FrequencyPair, bath: BathPair,
                   lam: AdiabaticityPair) -> CycleOutcome:
    """Heat exchanged on each isochore and the net extracted work.

    ``eta`` is filled in only when the cycle is an engine (positive work and
    positive heat intake from the hot bath); otherwise it is ``None`` and the
    caller should look at :attr:`CycleOutcome.mode`.
    """
    q_h, q_c = cycle_heats(freq, bath, lam)
    q_h, q_c = float(q_h), float(q_c)
    w_ext = q_h + q_c
    eta = w_ext / q_h if (w_ext > 0 and q_h > 0) else None
    return CycleOutcome(q_h=q_h, q_c=q_c, w_ext=w_ext, eta=eta)


def efficiency(outcome: CycleOutcome) -> float:
    """Work extracted per unit heat drawn from the hot bath."""
    if not outcome.is_engine:
        raise NotAnEngineError(
            f"not an engine: w_ext={outcome.w_ext:.6g}, q_h={outcome.q_h:.6g}")
    return outcome.w_ext / outcome.q_h
