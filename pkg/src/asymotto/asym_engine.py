"""Exact Otto cycles with one instantaneous work stroke.

SE (sudden expansion): the C -> D stroke is a quench, A -> B quasi-static.
SC (sudden compression): the A -> B stroke is a quench, C -> D quasi-static.

Every function takes a :class:`FrequencyPair` and a :class:`BathPair` whose
fields may be scalars or equally shaped arrays.
"""
from __future__ import annotations

import numpy as np

from .cycle_core import (
    AdiabaticityPair,
    BathPair,
    CycleOutcome,
    FrequencyPair,
    NotAnEngineError,
    coth,
    heats_and_work,
)

# |W| below this is treated as lying on the positive-work boundary.
PWC_TOL = 1e-12


def _unpack(freq: FrequencyPair, bath: BathPair):
    wc = np.asarray(freq.omega_c, dtype=float)
    wh = np.asarray(freq.omega_h, dtype=float)
    c_cold = coth(np.asarray(bath.beta_c) * wc / 2.0)
    c_hot = coth(np.asarray(bath.beta_h) * wh / 2.0)
    return wc, wh, c_cold, c_hot


def _scalar(x):
    return x[()] if np.ndim(x) == 0 else x


def work_se(freq: FrequencyPair, bath: BathPair):
    wc, wh, cc, ch = _unpack(freq, bath)
    return _scalar((wh - wc) * ((wc + wh) * ch - 2.0 * wh * cc) / (4.0 * wh))


def heat_hot_se(freq: FrequencyPair, bath: BathPair):
    wc, wh, cc, ch = _unpack(freq, bath)
    return _scalar(0.5 * wh * (ch - cc))


def pwc_se(freq: FrequencyPair, bath: BathPair):
    """Positive-work condition of the sudden-expansion cycle."""
    wc, wh, cc, ch = _unpack(freq, bath)
    return _scalar(ch / cc >= 2.0 * wh / (wc + wh))


def _eta_se_raw(wc, wh, cc, ch):
    return (wh - wc) * ((wc + wh) * ch - 2.0 * wh * cc) / (2.0 * wh * wh * (ch - cc))


def eta_se(freq: FrequencyPair, bath: BathPair):
    """Efficiency of the sudden-expansion engine.

    Raises :class:`NotAnEngineError` unless both the extracted work and the
    heat taken from the hot bath are strictly positive.  The result never
    reaches 1/2.
    """
    wc, wh, cc, ch = _unpack(freq, bath)
    w = (wh - wc) * ((wc + wh) * ch - 2.0 * wh * cc) / (4.0 * wh)
    q_h = 0.5 * wh * (ch - cc)
    if not np.all((w > 0) & (q_h > 0)):
        raise NotAnEngineError("sudden-expansion cycle is not an engine here")
    return _scalar(_eta_se_raw(wc, wh, cc, ch))


def work_sc(freq: FrequencyPair, bath: BathPair):
    wc, wh, cc, ch = _unpack(freq, bath)
    return _scalar((wc - wh) * ((wc + wh) * cc - 2.0 * wc * ch) / (4.0 * wc))


def heat_hot_sc(freq: FrequencyPair, bath: BathPair):
    wc, wh, cc, ch = _unpack(freq, bath)
    return _scalar((2.0 * wc * wh * ch - (wc * wc + wh * wh) * cc) / (4.0 * wc))


def pwc_sc(freq: FrequencyPair, bath: BathPair):
    """Positive-work condition of the sudden-compression cycle."""
    wc, wh, cc, ch = _unpack(freq, bath)
    return _scalar((wc + wh) * cc <= 2.0 * wc * ch)


def _eta_sc_raw(wc, wh, cc, ch):
    num = (wc - wh) * ((wc + wh) * cc - 2.0 * wc * ch)
    den = 2.0 * wc * wh * ch - (wc * wc + wh * wh) * cc
    return num / den


def eta_sc(freq: FrequencyPair, bath: BathPair):
    """Efficiency of the sudden-compression engine (bounded only by 1)."""
    wc, wh, cc, ch = _unpack(freq, bath)
    w = (wc - wh) * ((wc + wh) * cc - 2.0 * wc * ch) / (4.0 * wc)
    q_h = (2.0 * wc * wh * ch - (wc * wc + wh * wh) * cc) / (4.0 * wc)
    if not np.all((w > 0) & (q_h > 0)):
        raise NotAnEngineError("sudden-compression cycle is not an engine here")
    return _scalar(_eta_sc_raw(wc, wh, cc, ch))


def outcome_se(freq: FrequencyPair, bath: BathPair) -> CycleOutcome:
    return heats_and_work(freq, bath, AdiabaticityPair.sudden_expansion(freq))


def outcome_sc(freq: FrequencyPair, bath: BathPair) -> CycleOutcome:
    return heats_and_work(freq, bath, AdiabaticityPair.sudden_compression(freq))
