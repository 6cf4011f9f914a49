"""One-sided Levy distribution kernel and alternative-family samplers."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .special import inv_erf_one_minus, normal_cdf, normal_quantile
from .streams import RandomStream

__all__ = [
    "LevyParams",
    "AlternativeSpec",
    "ALTERNATIVE_FAMILIES",
    "levy_cdf",
    "levy_pdf",
    "levy_quantile",
    "sample_levy",
    "sample_alternative",
    "alternative_cdf",
]


@dataclass(frozen=True)
class LevyParams:
    """Location-scale parameters of the (possibly shifted) one-sided Levy law."""

    c: float = 1.0
    mu: float = 0.0

    def __post_init__(self):
        if not np.isfinite(self.c) or self.c <= 0.0:
            raise ValueError("scale c must be finite and > 0")
        if not np.isfinite(self.mu):
            raise ValueError("location mu must be finite")


def levy_cdf(x, p: LevyParams = LevyParams()):
    """CDF: 0 for x <= mu, else 2 - 2*Phi(sqrt(c/(x-mu)))."""
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    out = np.zeros_like(x)
    pos = x > p.mu
    if np.any(pos):
        out[pos] = 2.0 - 2.0 * normal_cdf(np.sqrt(p.c / (x[pos] - p.mu)))
    return float(out[0]) if scalar else out


def levy_pdf(x, p: LevyParams = LevyParams()):
    """Density: sqrt(c/2pi) * (x-mu)^(-3/2) * exp(-c/(2(x-mu))) on (mu, inf)."""
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    out = np.zeros_like(x)
    pos = x > p.mu
    if np.any(pos):
        t = x[pos] - p.mu
        out[pos] = np.sqrt(p.c / (2.0 * np.pi)) * t ** -1.5 * np.exp(-p.c / (2.0 * t))
    return float(out[0]) if scalar else out


def levy_quantile(prob, p: LevyParams = LevyParams()):
    """Quantile: mu + c / (sqrt(2) * erfinv(1 - prob))^2 for prob in (0, 1)."""
    q = np.asarray(prob, dtype=float)
    if np.any(q <= 0.0) or np.any(q >= 1.0):
        raise ValueError("quantile requires 0 < prob < 1")
    g = inv_erf_one_minus(q)
    return p.mu + p.c / (2.0 * g * g)


def sample_levy(p: LevyParams, n: int, stream: RandomStream, method: str = "fast") -> np.ndarray:
    """Draw n i.i.d. values from Lv(mu, c).

    method="fast": mu + c / Z^2 with Z standard normal (exact in law).
    method="inverse": quantile transform of uniforms; the slow reference path.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = stream.generator()
    if method == "fast":
        z = rng.standard_normal(n)
        return p.mu + p.c / (z * z)
    if method == "inverse":
        u = rng.random(n)
        # Guard the open-interval requirement of the quantile map.
        u = np.clip(u, np.finfo(float).tiny, 1.0 - np.finfo(float).epsneg)
        return levy_quantile(u, p)
    raise ValueError(f"unknown sampling method: {method!r}")


# Alternative families: name -> (parameter count, sampler).
# Parameter conventions follow the PDFs used in the power study.

def _sample_gamma(rng, n, k, theta):
    return rng.gamma(k, theta, size=n)


def _sample_chisq(rng, n, k):
    return rng.chisquare(k, size=n)


def _sample_weibull(rng, n, lam, k):
    return lam * rng.weibull(k, size=n)


def _sample_lognormal(rng, n, mu, sigma_sq):
    return rng.lognormal(mu, np.sqrt(sigma_sq), size=n)


def _sample_pareto(rng, n, sigma, alpha):
    # pdf alpha*sigma^alpha / x^(alpha+1) on [sigma, inf)
    return sigma * (1.0 + rng.pareto(alpha, size=n))


def _sample_rayleigh(rng, n, sigma):
    return rng.rayleigh(sigma, size=n)


def _sample_halfnormal(rng, n, sigma):
    return np.abs(sigma * rng.standard_normal(n))


def _sample_frechet(rng, n, m, s, alpha):
    # Triple read as (location m, scale s, shape alpha); shape must be positive.
    return m + s * rng.weibull(alpha, size=n) ** -1.0


def _sample_absloggamma(rng, n, k, theta):
    return np.abs(np.log(rng.gamma(k, theta, size=n)))


def _sample_invgaussian(rng, n, mu, lam):
    # Two-root transform with uniform rejection (Michael-Schucany-Haas).
    return rng.wald(mu, lam, size=n)


def _sample_burr(rng, n, mu, eta, sigma):
    # CDF 1 - (1 + (x/mu)^sigma)^(-eta); sampled by inversion.
    u = rng.random(n)
    return mu * ((1.0 - u) ** (-1.0 / eta) - 1.0) ** (1.0 / sigma)


ALTERNATIVE_FAMILIES = {
    "gamma": (2, _sample_gamma),
    "chisquared": (1, _sample_chisq),
    "weibull": (2, _sample_weibull),
    "lognormal": (2, _sample_lognormal),
    "pareto": (2, _sample_pareto),
    "rayleigh": (1, _sample_rayleigh),
    "halfnormal": (1, _sample_halfnormal),
    "frechet": (3, _sample_frechet),
    "absloggamma": (2, _sample_absloggamma),
    "invgaussian": (2, _sample_invgaussian),
    "burr": (3, _sample_burr),
}

# Families whose parameters may legitimately include zero (Frechet location).
_ZERO_OK = {"frechet": {0}, "lognormal": {0}}


@dataclass(frozen=True)
class AlternativeSpec:
    """One of the benchmark alternative families of the power study."""

    family: str
    params: tuple = field(default_factory=tuple)

    def __post_init__(self):
        fam = self.family.lower().replace("-", "").replace("_", "")
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "params", tuple(float(v) for v in self.params))
        if fam not in ALTERNATIVE_FAMILIES:
            raise ValueError(f"unknown alternative family: {self.family!r}")
        nparams, _ = ALTERNATIVE_FAMILIES[fam]
        if len(self.params) != nparams:
            raise ValueError(f"{fam} takes {nparams} parameter(s), got {len(self.params)}")
        zero_ok = _ZERO_OK.get(fam, set())
        for i, v in enumerate(self.params):
            if not np.isfinite(v):
                raise ValueError(f"{fam} parameter {i} must be finite")
            if v <= 0.0 and i not in zero_ok:
                raise ValueError(f"{fam} parameter {i} must be > 0")

    def label(self) -> str:
        return f"{self.family}({','.join(format(v, 'g') for v in self.params)})"


def sample_alternative(spec: AlternativeSpec, n: int, stream: RandomStream) -> np.ndarray:
    """Draw n i.i.d. values from the given alternative family."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _, sampler = ALTERNATIVE_FAMILIES[spec.family]
    return sampler(stream.generator(), n, *spec.params)


def alternative_cdf(spec: AlternativeSpec, x) -> np.ndarray:
    """Closed-form CDF of the alternative family (used for sampler validation)."""
    from scipy import stats

    x = np.asarray(x, dtype=float)
    fam, p = spec.family, spec.params
    if fam == "gamma":
        return stats.gamma.cdf(x, p[0], scale=p[1])
    if fam == "chisquared":
        return stats.chi2.cdf(x, p[0])
    if fam == "weibull":
        return stats.weibull_min.cdf(x, p[1], scale=p[0])
    if fam == "lognormal":
        return stats.lognorm.cdf(x, np.sqrt(p[1]), scale=np.exp(p[0]))
    if fam == "pareto":
        return stats.pareto.cdf(x, p[1], scale=p[0])
    if fam == "rayleigh":
        return stats.rayleigh.cdf(x, scale=p[0])
    if fam == "halfnormal":
        return stats.halfnorm.cdf(x, scale=p[0])
    if fam == "frechet":
        m, s, alpha = p
        return stats.invweibull.cdf(x, alpha, loc=m, scale=s)
    if fam == "absloggamma":
        k, theta = p
        g = stats.gamma(k, scale=theta)
        x_pos = np.maximum(x, 0.0)
        return g.cdf(np.exp(x_pos)) - g.cdf(np.exp(-x_pos))
    if fam == "invgaussian":
        mu, lam = p
        return stats.invgauss.cdf(x, mu / lam, scale=lam)
    if fam == "burr":
        mu, eta, sigma = p
        x_pos = np.maximum(x, 0.0)
        return 1.0 - (1.0 + (x_pos / mu) ** sigma) ** -eta
    raise ValueError(fam)
