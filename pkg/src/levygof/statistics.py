"""Goodness-of-fit statistics for the one-sided Levy null hypothesis.

Six scale-ratio / characterization statistics:

* ``vn``  — covariance-to-MLE scale ratio.
* ``on``  — ratio of two windowed-conditional-mean scale estimates.
* ``tn``  — ensemble of COV and QCM scale estimates against MLE.
* ``cn``  — ratio of two windowed-conditional-variance scale estimates
            (scale AND location invariant).
* ``ran`` — sum-stability kernel statistic on the MLE-scaled sample.
* ``deltan`` — pairwise-minimum characterization statistic.

Scalar entry points raise on precondition violations; the ``evaluate_batch``
path marks failed replicates as NaN so Monte Carlo callers can apply their own
failure policy.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .condmoments import QuantileSplit, Sample, theoretical_qcm, theoretical_qcv, window_indices
from .estimators import EstimationError

__all__ = [
    "StatisticSpec",
    "STATISTIC_KINDS",
    "stat_vn",
    "stat_on",
    "stat_tn",
    "stat_cn",
    "stat_ran",
    "stat_deltan",
    "evaluate",
    "evaluate_batch",
]

STATISTIC_KINDS = ("vn", "on", "tn", "cn", "ran", "deltan")

ON_SPLITS_DEFAULT = (QuantileSplit(0.0, 0.3), QuantileSplit(0.8, 0.95))
TN_SPLIT_DEFAULT = QuantileSplit(0.02, 0.48)
CN_SPLITS_DEFAULT = (QuantileSplit(0.0, 0.4), QuantileSplit(0.8, 0.95))
RAN_TUNING_DEFAULT = 0.2


@dataclass(frozen=True)
class StatisticSpec:
    kind: str
    splits: tuple = ()
    tuning: float = RAN_TUNING_DEFAULT

    def __post_init__(self):
        kind = self.kind.lower()
        object.__setattr__(self, "kind", kind)
        if kind not in STATISTIC_KINDS:
            raise ValueError(f"unknown statistic kind: {self.kind!r}")
        if not self.splits:
            defaults = {
                "on": ON_SPLITS_DEFAULT,
                "tn": (TN_SPLIT_DEFAULT,),
                "cn": CN_SPLITS_DEFAULT,
            }
            object.__setattr__(self, "splits", defaults.get(kind, ()))
        if kind == "ran" and self.tuning <= 0.0:
            raise ValueError("ran tuning parameter must be > 0")

    def label(self) -> str:
        return self.kind

    def min_n(self) -> int:
        """Smallest sample size for which every window is usable."""
        widths = {"on": 1, "tn": 1, "cn": 2}
        need = widths.get(self.kind)
        base = 2
        if need is None:
            return base
        n = base
        while True:
            if all(j - i >= need for i, j in (window_indices(n, s) for s in self.splits)):
                return n
            n += 1


# --- batched core -----------------------------------------------------------
# All statistics are evaluated row-wise on a (B, n) matrix. Row-local
# reductions make results independent of how the batch is chunked.

def _mle_batch(x: np.ndarray) -> np.ndarray:
    return 1.0 / (1.0 / x).mean(axis=1)


def _cov_batch(x: np.ndarray) -> np.ndarray:
    n = x.shape[1]
    y = 1.0 / x
    z = np.log(y)
    w = y - y.mean(axis=1, keepdims=True)
    v = z - z.mean(axis=1, keepdims=True)
    denom = np.sum(w * v, axis=1)
    out = 2.0 * n / denom
    out[denom <= 0.0] = np.nan
    return out


def _window_mean_batch(xs: np.ndarray, split: QuantileSplit) -> np.ndarray:
    i, j = window_indices(xs.shape[1], split)
    return xs[:, i:j].mean(axis=1)


def _window_var_batch(xs: np.ndarray, split: QuantileSplit) -> np.ndarray:
    i, j = window_indices(xs.shape[1], split)
    return xs[:, i:j].var(axis=1)


def _require_positive(x: np.ndarray) -> np.ndarray:
    bad = (x <= 0.0).any(axis=1)
    return bad


def evaluate_batch(spec: StatisticSpec, x: np.ndarray) -> np.ndarray:
    """Statistic values for each row of ``x``; NaN marks failed preconditions."""
    x = np.asarray(x, dtype=float)
    if x.ndim != 2:
        raise ValueError("expected a (B, n) matrix")
    b, n = x.shape
    if n < spec.min_n():
        raise ValueError(f"statistic {spec.kind} needs n >= {spec.min_n()}, got {n}")
    sq = np.sqrt(n)
    with np.errstate(all="ignore"):
        if spec.kind == "cn":
            s1, s2 = spec.splits
            xs = np.sort(x, axis=1)
            v1 = _window_var_batch(xs, s1) / theoretical_qcv(s1, 1.0)
            v2 = _window_var_batch(xs, s2) / theoretical_qcv(s2, 1.0)
            out = sq * (np.sqrt(v1 / v2) - 1.0)
            out[(v1 <= 0.0) | (v2 <= 0.0)] = np.nan
            return out

        bad = _require_positive(x)
        if spec.kind == "vn":
            out = sq * (_cov_batch(x) / _mle_batch(x) - 1.0)
        elif spec.kind == "on":
            s1, s2 = spec.splits
            xs = np.sort(x, axis=1)
            c1 = _window_mean_batch(xs, s1) / theoretical_qcm(s1, 1.0)
            c2 = _window_mean_batch(xs, s2) / theoretical_qcm(s2, 1.0)
            out = sq * (c1 / c2 - 1.0)
            out[(c1 <= 0.0) | (c2 <= 0.0)] = np.nan
        elif spec.kind == "tn":
            (s1,) = spec.splits
            xs = np.sort(x, axis=1)
            cq = _window_mean_batch(xs, s1) / theoretical_qcm(s1, 1.0)
            out = sq * ((_cov_batch(x) + cq) / (2.0 * _mle_batch(x)) - 1.0)
            out[cq <= 0.0] = np.nan
        elif spec.kind == "ran":
            a = spec.tuning
            s = x / _mle_batch(x)[:, None]
            pair = (a + (s[:, :, None] + s[:, None, :]) / 4.0) ** -2.5
            single = 0.5 * (a + s) ** -2.5
            ker = pair - single[:, :, None] - single[:, None, :]
            out = 3.0 * np.sqrt(np.pi) / (4.0 * n * n) * ker.sum(axis=(1, 2))
        elif spec.kind == "deltan":
            c = _mle_batch(x)
            mn = np.minimum(x[:, :, None], x[:, None, :])
            k1 = mn / x[:, :, None]
            k2 = mn / x[:, :, None] ** 2
            idx = np.arange(n)
            k1[:, idx, idx] = 0.0
            k2[:, idx, idx] = 0.0
            u1 = k1.sum(axis=(1, 2)) / (n * (n - 1))
            u2 = k2.sum(axis=(1, 2)) / (n * (n - 1))
            out = 1.5 * u1 - 0.5 * c * u2 - 0.5
        else:  # pragma: no cover
            raise ValueError(spec.kind)
        out[bad] = np.nan
        out[~np.isfinite(out)] = np.nan
        return out


def evaluate(spec: StatisticSpec, sample) -> float:
    """Scalar statistic; raises EstimationError on precondition failure."""
    s = sample if isinstance(sample, Sample) else Sample(sample)
    val = evaluate_batch(spec, s.values[None, :])[0]
    if not np.isfinite(val):
        raise EstimationError(
            f"statistic {spec.kind} undefined on this sample "
            "(nonpositive data, degenerate window, or bad covariance)")
    return float(val)


def stat_vn(sample) -> float:
    return evaluate(StatisticSpec("vn"), sample)


def stat_on(sample, spec: StatisticSpec | None = None) -> float:
    return evaluate(spec or StatisticSpec("on"), sample)


def stat_tn(sample, spec: StatisticSpec | None = None) -> float:
    return evaluate(spec or StatisticSpec("tn"), sample)


def stat_cn(sample, spec: StatisticSpec | None = None) -> float:
    return evaluate(spec or StatisticSpec("cn"), sample)


def stat_ran(sample, tuning: float = RAN_TUNING_DEFAULT) -> float:
    return evaluate(StatisticSpec("ran", tuning=tuning), sample)


def stat_deltan(sample) -> float:
    return evaluate(StatisticSpec("deltan"), sample)
