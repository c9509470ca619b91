"""Real roots of a real cubic without complex arithmetic.

Three distinct real roots (positive discriminant, the casus irreducibilis)
come from the trigonometric form; a single real root from its hyperbolic
continuation (cosh when the arccos argument leaves [-1, 1], sinh when the
depressed cubic is monotone).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

# |arccos argument| within this of 1 is treated as a repeated root.
REPEATED_ROOT_BAND = 1e-9


@dataclass(frozen=True)
class CubicCoefficients:
    """Coefficients of ``a x^3 + b x^2 + c x + d``."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        if self.a == 0:
            raise ValueError("leading coefficient must be non-zero")
        if not all(math.isfinite(v) for v in (self.a, self.b, self.c, self.d)):
            raise ValueError("coefficients must be finite")

    @property
    def discriminant(self) -> float:
        a, b, c, d = self.a, self.b, self.c, self.d
        return (18 * a * b * c * d - 4 * b ** 3 * d + b * b * c * c
                - 4 * a * c ** 3 - 27 * a * a * d * d)

    @property
    def monic(self):
        """Coefficients ``(A, B, C)`` of the monic form ``x^3 + A x^2 + B x + C``."""
        return self.b / self.a, self.c / self.a, self.d / self.a

    def __call__(self, x: float) -> float:
        return ((self.a * x + self.b) * x + self.c) * x + self.d

    def scale(self, x: float) -> float:
        """Magnitude against which a residual at ``x`` should be judged."""
        return max(abs(self.a), abs(self.b), abs(self.c), abs(self.d)) * max(1.0, abs(x)) ** 3


def _depressed_roots(p: float, q: float) -> list[float]:
    """Real roots of ``t^3 + p t + q``."""
    if p == 0.0:
        return [math.copysign(abs(q) ** (1.0 / 3.0), -q)] * (3 if q == 0.0 else 1)
    if p > 0.0:
        m = 2.0 * math.sqrt(p / 3.0)
        arg = 1.5 * q / p * math.sqrt(3.0 / p)
        return [-m * math.sinh(math.asinh(arg) / 3.0)]
    m = 2.0 * math.sqrt(-p / 3.0)
    arg = 1.5 * q / p * math.sqrt(-3.0 / p)
    if not math.isfinite(arg):
        return [math.copysign(abs(q) ** (1.0 / 3.0), -q)]
    if abs(abs(arg) - 1.0) < REPEATED_ROOT_BAND:
        s = math.copysign(1.0, arg)
        return [s * m, -0.5 * s * m, -0.5 * s * m]
    if abs(arg) < 1.0:
        theta = math.acos(arg)
        return [m * math.cos((theta - 2.0 * math.pi * k) / 3.0) for k in range(3)]
    return [math.copysign(m * math.cosh(math.acosh(abs(arg)) / 3.0), arg)]


def _polish(coeffs: CubicCoefficients, x: float, iterations: int = 3) -> float:
    A, B, C = coeffs.monic
    for _ in range(iterations):
        f = ((x + A) * x + B) * x + C
        df = (3.0 * x + 2.0 * A) * x + B
        if f == 0.0 or df == 0.0:
            break
        x_new = x - f / df
        if abs(((x_new + A) * x_new + B) * x_new + C) >= abs(f):
            break
        x = x_new
    return x


def cubic_real_roots(coeffs: CubicCoefficients) -> list[float]:
    """All real roots in ascending order, repeated roots listed with multiplicity."""
    A, B, C = coeffs.monic
    shift = -A / 3.0
    p = B - A * A / 3.0
    q = 2.0 * A ** 3 / 27.0 - A * B / 3.0 + C
    roots = [_polish(coeffs, t + shift) for t in _depressed_roots(p, q)]
    if len(roots) == 3:
        roots = _deflated(coeffs, roots)
    return sorted(roots)


def _deflated(coeffs: CubicCoefficients, roots: list[float]) -> list[float]:
    """Recover the two smaller roots from the largest one.

    Undoing the depressing shift cancels catastrophically for roots much
    smaller than the largest, so those come from Vieta's relations instead.
    """
    A, B, C = coeffs.monic
    big = max(roots, key=abs)
    if big == 0.0:
        return roots
    s = -A - big  # sum of the other two
    prod = -C / big
    disc = s * s - 4.0 * prod
    if disc < -REPEATED_ROOT_BAND * (s * s + 4.0 * abs(prod)):
        # the trigonometric branch was fooled by a tiny complex pair
        return [big]
    if disc < 0.0:
        # numerically merged pair
        pair = [0.5 * s, 0.5 * s]
    else:
        t = 0.5 * (s + math.copysign(math.sqrt(disc), s))
        pair = [t, prod / t] if t != 0.0 else [0.0, 0.0]
    return [big] + [_polish(coeffs, x) for x in pair]
