"""High-temperature reduced model of the four driving schemes.

In the limit beta*omega << 1 every quantity depends only on the compression
ratio ``z = omega_c/omega_h`` and the temperature ratio ``tau = beta_h/beta_c``.
Work and heats here are dimensionless (multiplied by ``beta_h``).

Schemes: ``AD`` both strokes quasi-static, ``SE`` sudden expansion, ``SC``
sudden compression, ``SS`` both strokes sudden.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .cubic import REPEATED_ROOT_BAND, CubicCoefficients


class Scheme(str, enum.Enum):
    AD = "ad"
    SE = "se"
    SC = "sc"
    SS = "ss"


@dataclass(frozen=True)
class ReducedParams:
    z: float
    tau: float

    def __post_init__(self):
        for name in ("z", "tau"):
            v = getattr(self, name)
            if not (math.isfinite(v) and 0.0 < v <= 1.0):
                raise ValueError(f"{name} must lie in (0, 1], got {v!r}")


@dataclass(frozen=True)
class HTQuantities:
    w: float
    qh: float
    qc: float
    eta: Optional[float]


def _arrays(z, tau):
    z = np.asarray(z, dtype=float)
    tau = np.asarray(tau, dtype=float)
    if np.any(z <= 0):
        raise ValueError("z must be positive")
    return z, tau


def _scalar(x):
    return x[()] if np.ndim(x) == 0 else x


def ht_heats(scheme, z, tau):
    """Return ``(qh, qc)`` in units of 1/beta_h."""
    scheme = Scheme(scheme)
    z, tau = _arrays(z, tau)
    if scheme in (Scheme.AD, Scheme.SE):
        qh = 1.0 - tau / z
    else:
        qh = 1.0 - (1.0 + z * z) * tau / (2.0 * z * z)
    if scheme in (Scheme.AD, Scheme.SC):
        qc = tau - z
    else:
        qc = tau - (1.0 + z * z) / 2.0
    return _scalar(qh), _scalar(qc)


def ht_work(scheme, z, tau):
    """Extracted work in units of 1/beta_h, written in factored form."""
    scheme = Scheme(scheme)
    z, tau = _arrays(z, tau)
    if scheme is Scheme.AD:
        w = (1.0 - z) * (1.0 - tau / z)
    elif scheme is Scheme.SE:
        w = (1.0 - z) * ((z + 1.0) / 2.0 - tau / z)
    elif scheme is Scheme.SC:
        w = (z - 1.0) * (tau * (z + 1.0) / (2.0 * z * z) - 1.0)
    else:
        w = (1.0 - z * z) * (z * z - tau) / (2.0 * z * z)
    return _scalar(w)


def ht_efficiency(scheme, z, tau):
    """Efficiency where the cycle is an engine, NaN elsewhere.

    Array helper for sweeps; :func:`ht_quantities` is the checked scalar API.
    """
    scheme = Scheme(scheme)
    z, tau = _arrays(z, tau)
    w = ht_work(scheme, z, tau)
    qh, _ = ht_heats(scheme, z, tau)
    with np.errstate(divide="ignore", invalid="ignore"):
        eta = np.where((w > 0) & (qh > 0), w / qh, np.nan)
    return _scalar(eta)


def ht_efficiency_formula(scheme, z, tau):
    """Closed-form efficiency curve, evaluated without any engine check."""
    scheme = Scheme(scheme)
    z, tau = _arrays(z, tau)
    with np.errstate(divide="ignore", invalid="ignore"):
        if scheme is Scheme.AD:
            eta = 1.0 - z
        elif scheme is Scheme.SE:
            eta = (1.0 - z) * (z * z + z - 2.0 * tau) / (2.0 * (z - tau))
        elif scheme is Scheme.SC:
            eta = (z - 1.0) * (2.0 * z * z - tau * (z + 1.0)) / (tau + (tau - 2.0) * z * z)
        else:
            eta = (z * z - 1.0) * (z * z - tau) / (tau - z * z * (2.0 - tau))
    return _scalar(eta)


def ht_quantities(p: ReducedParams, scheme) -> HTQuantities:
    w = float(ht_work(scheme, p.z, p.tau))
    qh, qc = (float(v) for v in ht_heats(scheme, p.z, p.tau))
    eta = w / qh if (w > 0 and qh > 0) else None
    return HTQuantities(w=w, qh=qh, qc=qc, eta=eta)


# -- maximum efficiency ------------------------------------------------------

@dataclass(frozen=True)
class TrigAuxiliaries:
    """Auxiliary angles of the closed-form efficiency maxima.

    ``k_aux`` is the shift with ``z*_SE = tau/2 + k_aux``; ``b_aux`` is the
    angle in radians entering the sudden-compression maximum.
    """

    k_aux: float
    b_aux: float


def _check_tau(tau: float) -> float:
    tau = float(tau)
    if not (math.isfinite(tau) and 0.0 < tau <= 1.0):
        raise ValueError(f"tau must lie in (0, 1], got {tau!r}")
    return tau


def _se_offset(tau: float) -> float:
    """``z*_SE - tau``, computed without cancellation as tau -> 1.

    For tau >= 1/2 the arccos argument equals ``1 - 2 s^2`` with
    ``s = (1 - tau)/tau``, so the angle is ``pi - 2 asin(s)``; that form keeps
    full relative accuracy near the Carnot limit.  Below 1/2 the argument
    exceeds 1 and the hyperbolic continuation gives the root in (0, 1).
    """
    arg = ((tau - 4.0) * tau + 2.0) / (tau * tau)
    if abs(arg - 1.0) < REPEATED_ROOT_BAND:
        return 0.5 * tau
    if tau > 0.5:
        a = 2.0 * math.asin((1.0 - tau) / tau) / 3.0
        return tau * (math.sqrt(3.0) / 2.0 * math.sin(a) - math.sin(a / 2.0) ** 2)
    return tau * math.cosh(math.acosh(arg) / 3.0) - 0.5 * tau


def se_optimum_cubic(tau: float) -> CubicCoefficients:
    """Stationarity condition of the SE efficiency in z."""
    tau = _check_tau(tau)
    return CubicCoefficients(2.0, -3.0 * tau, 0.0, tau * (2.0 * tau - 1.0))


def trig_auxiliaries(tau: float) -> TrigAuxiliaries:
    tau = _check_tau(tau)
    return TrigAuxiliaries(k_aux=_se_offset(tau) + 0.5 * tau, b_aux=_sc_angle(tau))


def zstar_se(tau: float) -> float:
    """Compression ratio maximizing the high-temperature SE efficiency."""
    tau = _check_tau(tau)
    return tau + _se_offset(tau)


def eta_up_se(tau: float) -> float:
    """Maximum high-temperature efficiency with a sudden expansion stroke."""
    tau = _check_tau(tau)
    d = _se_offset(tau)
    if d == 0.0:
        return 0.0
    one_minus_z = (1.0 - tau) - d
    # z^2 + z - 2 tau rewritten around z = tau + d
    bracket = -tau * (1.0 - tau) + d * (2.0 * tau + 1.0) + d * d
    return one_minus_z * bracket / (2.0 * d)


def _sc_angle(tau: float) -> float:
    # arccos(-sqrt((2 - tau) tau)) == pi - asin(1 - tau)
    return (math.pi - math.asin(1.0 - tau)) / 3.0


def zstar_sc(tau: float) -> float:
    """Compression ratio maximizing the high-temperature SC efficiency."""
    tau = _check_tau(tau)
    return min(1.0, 2.0 * math.sqrt(tau / (2.0 - tau)) * math.cos(_sc_angle(tau)))


def eta_up_sc_direct(tau: float) -> float:
    """Maximum SC efficiency evaluated term by term from the B-angle formula.

    Accurate away from tau = 1; :func:`eta_up_sc` is the production route.
    """
    tau = _check_tau(tau)
    if tau == 1.0:
        return 0.0
    b = _sc_angle(tau)
    cb = math.cos(b)
    num = 2.0 - tau + 16.0 * math.sqrt(tau / (2.0 - tau)) * cb ** 3 - 4.0 * (2.0 + tau) * cb * cb
    return num / ((tau - 2.0) * (2.0 * math.cos(2.0 * b) + 1.0))


def eta_up_sc(tau: float) -> float:
    """Maximum high-temperature efficiency with a sudden compression stroke.

    Evaluates the SC efficiency at ``z* = 2 sqrt(tau/(2-tau)) cos B`` in the
    small variables ``u = 1 - tau`` and ``eps = 1 - z*`` so that no O(1)
    terms cancel near the Carnot limit.
    """
    tau = _check_tau(tau)
    u = 1.0 - tau
    if u == 0.0:
        return 0.0
    # z* = r g with r = sqrt((1-u)/(1+u)) = 1 - delta and g = 1 + gamma
    r = math.sqrt((1.0 - u) / (1.0 + u))
    delta = 2.0 * u / ((1.0 + u) * (1.0 + r))
    a = math.asin(u) / 3.0
    gamma = math.sqrt(3.0) * math.sin(a) - 2.0 * math.sin(a / 2.0) ** 2
    eps = delta + delta * gamma - gamma
    num = eps * (-3.0 * eps + 2.0 * eps * eps + 2.0 * u - u * eps)
    den = 2.0 * u - (1.0 + u) * eps * (2.0 - eps)
    return num / den


# -- efficiency at maximum work ---------------------------------------------

def _check_eta_c(eta_c: float) -> float:
    eta_c = float(eta_c)
    if not (math.isfinite(eta_c) and 0.0 <= eta_c < 1.0):
        raise ValueError(f"eta_c must lie in [0, 1), got {eta_c!r}")
    return eta_c


def _cbrt_tau(eta_c: float):
    """``(1 - eta_c)^(1/3)`` and that value minus one, both accurate."""
    third_log = math.log1p(-eta_c) / 3.0
    return math.exp(third_log), math.expm1(third_log)


def eta_mw_se(eta_c: float) -> float:
    """SE efficiency at the work-maximizing ratio z = tau^(1/3)."""
    eta_c = _check_eta_c(eta_c)
    if eta_c == 0.0:
        return 0.0
    c, m = _cbrt_tau(eta_c)
    # 3(c - 1) + eta_c == -m^2 (m + 3) exactly; avoids an O(eta_c) cancellation
    return -m * (m * (m + 3.0) + 2.0 * eta_c) / (2.0 * (m + eta_c))


def eta_mw_sc(eta_c: float) -> float:
    """SC efficiency at the work-maximizing ratio z = tau^(1/3)."""
    eta_c = _check_eta_c(eta_c)
    if eta_c == 0.0:
        return 0.0
    c, cm1 = _cbrt_tau(eta_c)
    return -(4.0 * cm1 * (c + 2.0) + eta_c * (4.0 * c + eta_c - 1.0)) / (4.0 + eta_c * (eta_c + 3.0))


# -- small-eta_c behaviour ---------------------------------------------------

class TaylorCurve(str, enum.Enum):
    UP_SE = "up_se"
    UP_SC = "up_sc"
    MW_SE = "mw_se"
    MW_SC = "mw_sc"


_SQRT3 = math.sqrt(3.0)
_TAYLOR = {
    TaylorCurve.UP_SE: (2.0 - _SQRT3, _SQRT3 - 5.0 / 3.0, 1.0 / (18.0 * _SQRT3)),
    TaylorCurve.UP_SC: (2.0 - _SQRT3, 2.0 / 3.0 * (3.0 * _SQRT3 - 5.0), (252.0 - 143.0 * _SQRT3) / 54.0),
    TaylorCurve.MW_SE: (1.0 / 4.0, 5.0 / 72.0, 5.0 / 144.0),
    TaylorCurve.MW_SC: (1.0 / 4.0, 17.0 / 144.0, 41.0 / 576.0),
}


def taylor_coefficients(curve) -> tuple[float, float, float]:
    """First three coefficients of the curve's expansion in powers of eta_c."""
    return _TAYLOR[TaylorCurve(curve)]


def curve_function(curve):
    """The curve as a function of the Carnot efficiency."""
    curve = TaylorCurve(curve)
    if curve is TaylorCurve.UP_SE:
        return lambda e: eta_up_se(1.0 - e)
    if curve is TaylorCurve.UP_SC:
        return lambda e: eta_up_sc(1.0 - e)
    if curve is TaylorCurve.MW_SE:
        return eta_mw_se
    return eta_mw_sc


# -- crossings between schemes ----------------------------------------------

@dataclass(frozen=True)
class Intersections:
    z_work: float
    z_eff: float
    eta_intsec: float
    z_maxwork: float


def eta_intsec(tau: float) -> float:
    """Efficiency where the SE and SC curves cross; also the SS maximum."""
    tau = _check_tau(tau)
    eta_c = 1.0 - tau
    return (3.0 - 2.0 * math.sqrt(2.0 * tau) - eta_c) * eta_c / (1.0 + eta_c) ** 2


def intersections(tau: float) -> Intersections:
    tau = _check_tau(tau)
    return Intersections(
        z_work=math.sqrt(tau),
        z_eff=(tau + math.sqrt(2.0 * tau) * (1.0 - tau)) / (2.0 - tau),
        eta_intsec=eta_intsec(tau),
        z_maxwork=tau ** (1.0 / 3.0),
    )
