"""Quantile conditional moments of the one-sided Levy law.

Closed forms for the conditional mean and variance on a quantile window,
order-statistic sample estimators, and an independent adaptive-quadrature
oracle used to validate the closed forms.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.integrate import quad
from scipy.special import erf

from .distributions import LevyParams, levy_pdf, levy_quantile
from .special import inv_erf_one_minus

__all__ = [
    "QuantileSplit",
    "Sample",
    "theoretical_qcm",
    "theoretical_qcv",
    "qcmoment_quadrature_oracle",
    "sample_qcm",
    "sample_qcv",
    "window_indices",
]

_SQRT_PI = np.sqrt(np.pi)


@dataclass(frozen=True)
class QuantileSplit:
    a: float
    b: float

    def __post_init__(self):
        if not (np.isfinite(self.a) and np.isfinite(self.b)):
            raise ValueError("split bounds must be finite")
        if not 0.0 <= self.a < self.b <= 1.0:
            raise ValueError("split requires 0 <= a < b <= 1")

    def require_open_top(self):
        # The closed forms diverge at b = 1 (the unconditional mean is infinite).
        if self.b >= 1.0:
            raise ValueError("theoretical moments require b < 1")


class Sample:
    """Observation vector with a cached order-statistic view."""

    def __init__(self, values):
        arr = np.asarray(values, dtype=float).ravel()
        if arr.size < 1:
            raise ValueError("sample must contain at least one observation")
        if np.any(~np.isfinite(arr)):
            raise ValueError("sample contains non-finite values")
        self.values = arr
        self.n = arr.size

    @cached_property
    def sorted_view(self) -> np.ndarray:
        return np.sort(self.values)


def _as_sample(s) -> Sample:
    return s if isinstance(s, Sample) else Sample(s)


def _exp_over(u: float, power: int) -> float:
    """exp(-u^2) / u^power with the u -> inf limit handled (a = 0 windows)."""
    if not np.isfinite(u):
        return 0.0
    return float(np.exp(-u * u) / u**power)


def theoretical_qcm(split: QuantileSplit, c: float = 1.0) -> float:
    """Conditional mean of Lv(c) between its a- and b-quantiles; linear in c."""
    split.require_open_top()
    if c <= 0.0:
        raise ValueError("scale c must be > 0")
    ga = inv_erf_one_minus(split.a)
    gb = inv_erf_one_minus(split.b)
    return c * ((_exp_over(gb, 1) - _exp_over(ga, 1)) / (_SQRT_PI * (split.b - split.a)) - 1.0)


def _second_moment_antiderivative(u: float) -> float:
    # Antiderivative of exp(-u^2)/u^4 scaled into the second-moment substitution.
    if not np.isfinite(u):
        return 2.0 * _SQRT_PI / 3.0
    e = float(np.exp(-u * u))
    return -e / (3.0 * u**3) + (2.0 / 3.0) * e / u + (2.0 * _SQRT_PI / 3.0) * float(erf(u))


def theoretical_second_moment(split: QuantileSplit, c: float = 1.0) -> float:
    """Conditional second moment of Lv(c) on the window; quadratic in c."""
    split.require_open_top()
    if c <= 0.0:
        raise ValueError("scale c must be > 0")
    ga = inv_erf_one_minus(split.a)
    gb = inv_erf_one_minus(split.b)
    num = _second_moment_antiderivative(ga) - _second_moment_antiderivative(gb)
    return c * c * num / (2.0 * _SQRT_PI * (split.b - split.a))


def theoretical_qcv(split: QuantileSplit, c: float = 1.0) -> float:
    """Conditional variance of Lv(c) on the window; scales as c^2."""
    m1 = theoretical_qcm(split, c)
    return theoretical_second_moment(split, c) - m1 * m1


class QuadratureError(RuntimeError):
    pass


def qcmoment_quadrature_oracle(split: QuantileSplit, c: float = 1.0, order: int = 1) -> float:
    """E[X^order | window] by adaptive quadrature; independent of the closed forms."""
    split.require_open_top()
    if order not in (1, 2):
        raise ValueError("order must be 1 or 2")
    p = LevyParams(c=c)
    lo = 0.0 if split.a == 0.0 else float(levy_quantile(split.a, p))
    hi = float(levy_quantile(split.b, p))
    val, err = quad(lambda x: x**order * levy_pdf(x, p), lo, hi,
                    epsabs=1e-12, epsrel=1e-12, limit=500)
    if err > 1e-8 * max(1.0, abs(val)):
        raise QuadratureError(
            f"quadrature did not converge: value={val!r} err={err!r} split={split}")
    return val / (split.b - split.a)


def window_indices(n: int, split: QuantileSplit) -> tuple[int, int]:
    """Half-open index range [floor(n*a), floor(n*b)) into the order statistics."""
    return int(np.floor(n * split.a)), int(np.floor(n * split.b))


def _min_n_for(split: QuantileSplit, width: int) -> int:
    n = 1
    while True:
        i, j = window_indices(n, split)
        if j - i >= width:
            return n
        n += 1
        if n > 10**7:  # pragma: no cover
            raise RuntimeError("no feasible n for split")


def sample_qcm(s, split: QuantileSplit) -> float:
    """Mean of the order statistics with 1-based index in (floor(na), floor(nb)]."""
    s = _as_sample(s)
    i, j = window_indices(s.n, split)
    if j - i < 1:
        raise ValueError(
            f"empty window for split ({split.a}, {split.b}) at n={s.n}; "
            f"need n >= {_min_n_for(split, 1)}")
    return float(s.sorted_view[i:j].mean())


def sample_qcv(s, split: QuantileSplit) -> float:
    """Windowed variance with divisor equal to the window size."""
    s = _as_sample(s)
    i, j = window_indices(s.n, split)
    if j - i < 2:
        raise ValueError(
            f"window of size {j - i} too small for a variance at n={s.n}; "
            f"need n >= {_min_n_for(split, 2)}")
    w = s.sorted_view[i:j]
    return float(w.var())
