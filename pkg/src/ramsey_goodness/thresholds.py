"""Integer-exact parameter formulas.

All ceilings and floors go through integer division; nothing here touches
floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, WindowError


def ceil_div(a: int, b: int) -> int:
    """``ceil(a / b)`` for ``b > 0``."""
    return -(-a // b)


def window(r: int, t: int, k: int) -> tuple[int, int]:
    """Inclusive range of host orders ``n`` that belong to interval ``k``."""
    base = (r - 1) * (t - 1)
    return base * k + 1, base * (k + 1)


def k_of(r: int, t: int, n: int) -> int:
    """The unique ``k`` with ``(r-1)(t-1)k < n <= (r-1)(t-1)(k+1)``."""
    if r < 2 or t < 2:
        raise InputError("need r >= 2 and t >= 2")
    base = (r - 1) * (t - 1)
    if n <= base:
        raise WindowError(
            f"n={n} is below classical Ramsey window: need n > (r-1)(t-1) = {base}; "
            "k = 0 is the vacuous case (threshold delta >= n)"
        )
    return ceil_div(n, base) - 1


@dataclass(frozen=True)
class GoodnessParams:
    r: int
    t: int
    k: int
    n: int

    def __post_init__(self):
        if self.r < 2 or self.t < 2:
            raise InputError("need r >= 2 and t >= 2")
        if self.k < 1:
            raise WindowError("k = 0 is the vacuous case; k must be at least 1")
        lo, hi = window(self.r, self.t, self.k)
        if not lo <= self.n <= hi:
            raise WindowError(
                f"n={self.n} not in window ({lo - 1}, {hi}] for r={self.r}, t={self.t}, k={self.k}"
            )

    @classmethod
    def for_order(cls, r: int, t: int, n: int) -> GoodnessParams:
        return cls(r, t, k_of(r, t, n), n)

    @property
    def x(self) -> int:
        return ceil_div(self.n, self.r - 1)

    @property
    def M(self) -> int:
        return self.x // (self.k + 1)

    @property
    def window(self) -> tuple[int, int]:
        return window(self.r, self.t, self.k)

    def as_dict(self) -> dict:
        lo, hi = self.window
        return {
            "r": self.r, "t": self.t, "k": self.k, "n": self.n,
            "x": self.x, "M": self.M, "threshold": degree_threshold(self),
            "window": [lo - 1, hi],
        }


def degree_threshold(p: GoodnessParams) -> int:
    """``n - ceil(k x / (k+1))``, cross-checked against ``n - x + M``."""
    ceiling_form = p.n - ceil_div(p.k * p.x, p.k + 1)
    shifted_form = p.n - p.x + p.M
    if ceiling_form != shifted_form:
        raise AssertionError(f"threshold forms disagree for {p}: {ceiling_form} != {shifted_form}")
    return ceiling_form


def ceiling_identity_check(y: int, k: int) -> bool:
    """``ceil(y - y/(k+1)) == y - floor(y/(k+1))``, evaluated with exact rationals."""
    if k < 1:
        raise InputError("k must be at least 1")
    return math.ceil(Fraction(y) - Fraction(y, k + 1)) == y - y // (k + 1)


def burr_lower_bound(chi: int, surplus: int, h_order: int) -> int:
    """``(chi - 1)(h_order - 1) + surplus``, the chromatic Ramsey lower bound."""
    if chi < 1 or surplus < 1 or h_order < surplus:
        raise InputError("need chi >= 1 and h_order >= surplus >= 1")
    return (chi - 1) * (h_order - 1) + surplus


def goodness_value(r: int, t: int) -> int:
    """Predicted ``r(K_r, P_t) = (r-1)(t-1) + 1``."""
    if r < 2 or t < 1:
        raise InputError("need r >= 2 and t >= 1")
    return (r - 1) * (t - 1) + 1


def extremal_degree(p: GoodnessParams) -> int:
    """Minimum degree of the tightness construction, one below the threshold."""
    if p.n != window(p.r, p.t, p.k)[1]:
        raise InputError(
            f"the construction lives at n = (r-1)(t-1)(k+1) = {window(p.r, p.t, p.k)[1]}, got {p.n}"
        )
    return p.n - ceil_div(p.k * p.x, p.k + 1) - 1
