"""Operational-mode phase diagrams of the high-temperature asymmetric cycles.

Two independent routes label a point ``(tau, z)``: :func:`classify` reads
the signs of the reduced work and heats, :func:`region_mode` applies the
closed-form region boundaries.  :func:`phase_grid` rasterizes the first.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .cycle_core import BOUNDARY_TOL, OperationalMode, mode_from_signs
from .high_temp import ReducedParams, Scheme, ht_heats, ht_work

# Integer codes used in raster arrays; FORBIDDEN marks an impossible sign triple.
MODE_CODES = {
    OperationalMode.BOUNDARY: 0,
    OperationalMode.ENGINE: 1,
    OperationalMode.REFRIGERATOR: 2,
    OperationalMode.HEATER: 3,
    OperationalMode.ACCELERATOR: 4,
}
CODE_MODES = {v: k for k, v in MODE_CODES.items()}
FORBIDDEN = -1


def _check_scheme(scheme) -> Scheme:
    scheme = Scheme(scheme)
    if scheme not in (Scheme.SE, Scheme.SC):
        raise ValueError("phase maps are defined for the 'se' and 'sc' schemes")
    return scheme


def classify(scheme, p: ReducedParams) -> OperationalMode:
    scheme = _check_scheme(scheme)
    w = float(ht_work(scheme, p.z, p.tau))
    qh, qc = (float(v) for v in ht_heats(scheme, p.z, p.tau))
    return mode_from_signs(w, qh, qc)


def classify_array(scheme, tau, z, tol: float = BOUNDARY_TOL) -> np.ndarray:
    """Vectorized :func:`classify` returning integer mode codes."""
    scheme = _check_scheme(scheme)
    tau, z = np.broadcast_arrays(np.asarray(tau, dtype=float), np.asarray(z, dtype=float))
    w = ht_work(scheme, z, tau)
    qh, qc = ht_heats(scheme, z, tau)
    codes = np.full(w.shape, FORBIDDEN, dtype=np.int8)
    codes[(w > 0) & (qh > 0) & (qc < 0)] = MODE_CODES[OperationalMode.ENGINE]
    codes[(w < 0) & (qh < 0) & (qc > 0)] = MODE_CODES[OperationalMode.REFRIGERATOR]
    codes[(w < 0) & (qh < 0) & (qc < 0)] = MODE_CODES[OperationalMode.HEATER]
    codes[(w < 0) & (qh > 0) & (qc < 0)] = MODE_CODES[OperationalMode.ACCELERATOR]
    near_zero = (np.abs(w) <= tol) | (np.abs(qh) <= tol) | (np.abs(qc) <= tol)
    codes[near_zero] = MODE_CODES[OperationalMode.BOUNDARY]
    return codes


@dataclass(frozen=True)
class RegionBoundaries:
    """Closed-form thresholds in z at fixed tau.

    ``refrigerator_max_z`` is ``None`` when no refrigerator exists at this
    tau.  Intervals are closed ``(lo, hi)`` pairs.
    """

    engine_min_z: float
    refrigerator_max_z: Optional[float]
    heater_interval: tuple[float, float]
    accelerator_interval: tuple[float, float]


def _engine_threshold(scheme: Scheme, tau):
    if scheme is Scheme.SE:
        return (np.sqrt(8.0 * tau + 1.0) - 1.0) / 2.0
    return (np.sqrt(tau * (8.0 + tau)) + tau) / 4.0


def region_boundaries(scheme, tau: float) -> RegionBoundaries:
    scheme = _check_scheme(scheme)
    tau = float(tau)
    if not 0.0 < tau < 1.0:
        raise ValueError("tau must lie in (0, 1)")
    z_engine = float(_engine_threshold(scheme, tau))
    if scheme is Scheme.SE:
        fridge = math.sqrt(2.0 * tau - 1.0) if tau >= 0.5 else None
        heater = (fridge or 0.0, tau)
        accel = (tau, z_engine)
    else:
        fridge = tau
        z_heat = math.sqrt(tau / (2.0 - tau))
        heater = (tau, z_heat)
        accel = (z_heat, z_engine)
    return RegionBoundaries(z_engine, fridge, heater, accel)


def _boundary_curves(scheme: Scheme, tau):
    tau = np.asarray(tau, dtype=float)
    if scheme is Scheme.SE:
        fridge = np.sqrt(np.clip(2.0 * tau - 1.0, 0.0, None))
        return _engine_threshold(scheme, tau), tau, fridge
    return _engine_threshold(scheme, tau), np.sqrt(tau / (2.0 - tau)), tau


def region_mode(scheme, tau, z) -> np.ndarray:
    """Mode codes from the closed-form boundaries (independent of the sign route)."""
    scheme = _check_scheme(scheme)
    tau, z = np.broadcast_arrays(np.asarray(tau, dtype=float), np.asarray(z, dtype=float))
    z_engine, z_mid, z_low = _boundary_curves(scheme, tau)
    # ordering of the curves: z_low <= z_mid <= z_engine for both schemes
    codes = np.full(z.shape, MODE_CODES[OperationalMode.REFRIGERATOR], dtype=np.int8)
    codes[z >= z_low] = MODE_CODES[OperationalMode.HEATER]
    codes[z >= z_mid] = MODE_CODES[OperationalMode.ACCELERATOR]
    codes[z >= z_engine] = MODE_CODES[OperationalMode.ENGINE]
    return codes


def boundary_distance(scheme, tau, z) -> np.ndarray:
    """Distance in z from ``(tau, z)`` to the nearest region boundary curve."""
    scheme = _check_scheme(scheme)
    tau, z = np.broadcast_arrays(np.asarray(tau, dtype=float), np.asarray(z, dtype=float))
    curves = _boundary_curves(scheme, tau)
    dist = np.min([np.abs(z - c) for c in curves], axis=0)
    if scheme is Scheme.SE:
        # the refrigerator curve only exists for tau >= 1/2
        upper = np.minimum(np.abs(z - curves[0]), np.abs(z - curves[1]))
        dist = np.where(tau < 0.5, upper, dist)
    return dist[()] if dist.ndim == 0 else dist


@dataclass(frozen=True)
class PhaseGrid:
    tau_axis: np.ndarray
    z_axis: np.ndarray
    cells: np.ndarray
    scheme: Scheme

    def __post_init__(self):
        if self.cells.shape != (len(self.tau_axis), len(self.z_axis)):
            raise ValueError("cells must have shape (len(tau_axis), len(z_axis))")

    def mode_at(self, i: int, j: int) -> OperationalMode:
        return CODE_MODES[int(self.cells[i, j])]

    def counts(self) -> dict[OperationalMode, int]:
        return {mode: int(np.count_nonzero(self.cells == code)) for mode, code in MODE_CODES.items()}

    def fraction(self, *modes: OperationalMode) -> float:
        mask = np.isin(self.cells, [MODE_CODES[m] for m in modes])
        return float(mask.mean())

    def rows(self):
        """Yield ``(tau, z, mode_name)`` in row-major order (tau outer)."""
        for i, tau in enumerate(self.tau_axis):
            for j, z in enumerate(self.z_axis):
                yield float(tau), float(z), CODE_MODES[int(self.cells[i, j])].value

    def to_csv(self, fmt: str = ".12g") -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["tau", "z", "mode"])
        for tau, z, mode in self.rows():
            writer.writerow([format(tau, fmt), format(z, fmt), mode])
        return buf.getvalue()


def _axis(lo: float, hi: float, n: int, endpoints: bool) -> np.ndarray:
    if endpoints:
        return np.linspace(lo, hi, n)
    step = (hi - lo) / n
    return lo + step * (np.arange(n) + 0.5)


def phase_grid(scheme, tau_range=(0.0, 1.0), z_range=(0.0, 1.0), resolution=500,
               endpoints: bool = False) -> PhaseGrid:
    """Classify a regular ``(tau, z)`` raster.

    By default the grid holds cell centres, so the open unit square can be
    covered without touching the pole at z = 0.  ``resolution`` is an int or
    a ``(n_tau, n_z)`` pair.
    """
    scheme = _check_scheme(scheme)
    n_tau, n_z = (resolution, resolution) if np.isscalar(resolution) else resolution
    if n_tau < 2 or n_z < 2:
        raise ValueError("resolution must be at least 2 along each axis")
    (t0, t1), (z0, z1) = tau_range, z_range
    if not t1 > t0 or not z1 > z0:
        raise ValueError("ranges must be non-empty")
    tau_axis = _axis(t0, t1, n_tau, endpoints)
    z_axis = _axis(z0, z1, n_z, endpoints)
    if tau_axis[0] <= 0 or tau_axis[-1] > 1 or z_axis[0] <= 0 or z_axis[-1] > 1:
        raise ValueError("grid points must satisfy 0 < tau <= 1 and 0 < z <= 1")
    cells = classify_array(scheme, tau_axis[:, None], z_axis[None, :])
    return PhaseGrid(tau_axis, z_axis, cells, scheme)
