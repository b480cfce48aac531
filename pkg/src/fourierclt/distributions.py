"""Catalog of probability laws standardized to mean 0 and variance 1.

Characteristic functions follow the convention C(xi) = E exp(-i*xi*X).
Every law also exposes ``log_cf``, an accurate log of its cf; long products of
cfs are accumulated through it so that values near xi = 0 keep full precision.
Any branch of the complex log is acceptable since only exp(sum(log)) is used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping

import numpy as np
from numpy.typing import ArrayLike
from scipy import integrate, special, stats

from fourierclt.errors import ConfigError, DomainError, EvaluatorError
from fourierclt.rng import STREAM_SAMPLE, draw_blocks

CfFn = Callable[[ArrayLike], np.ndarray]
Sampler = Callable[[np.random.Generator, int], np.ndarray]
CdfFn = Callable[[ArrayLike], np.ndarray]

FAMILIES = (
    "normal",
    "rademacher",
    "uniform",
    "exponential",
    "bernoulli",
    "student_t",
)

_SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class Distribution:
    name: str
    cf: CfFn
    log_cf: CfFn
    sampler: Sampler
    abs_moment_order: float
    moment_fn: Callable[[float], float] = field(repr=False)
    third_moment: float | None
    cdf: CdfFn | None = None
    pdf: CdfFn | None = None
    mean: float = 0.0
    variance: float = 1.0


def _xi(x: ArrayLike) -> np.ndarray:
    return np.asarray(x, dtype=float)


def _log_of_real(value: np.ndarray, log_abs: np.ndarray) -> np.ndarray:
    # Real cfs may be negative; exp(log|v| + i*pi) restores the sign.
    return log_abs + 1j * np.where(value < 0, np.pi, 0.0)


# -- normal ------------------------------------------------------------------


def _normal() -> Distribution:
    def cf(xi: ArrayLike) -> np.ndarray:
        x = _xi(xi)
        return np.exp(-0.5 * x * x).astype(complex)

    def log_cf(xi: ArrayLike) -> np.ndarray:
        x = _xi(xi)
        return (-0.5 * x * x).astype(complex)

    def moment(s: float) -> float:
        return math.exp(
            0.5 * s * math.log(2.0) + special.gammaln(0.5 * (s + 1.0))
            - 0.5 * math.log(math.pi)
        )

    return Distribution(
        name="normal",
        cf=cf,
        log_cf=log_cf,
        sampler=lambda rng, n: rng.standard_normal(n),
        abs_moment_order=math.inf,
        moment_fn=moment,
        third_moment=0.0,
        cdf=lambda x: special.ndtr(_xi(x)),
        pdf=lambda x: np.exp(-0.5 * _xi(x) ** 2) / math.sqrt(2.0 * math.pi),
    )


# -- rademacher --------------------------------------------------------------


def _rademacher() -> Distribution:
    def cf(xi: ArrayLike) -> np.ndarray:
        return np.cos(_xi(xi)).astype(complex)

    def log_cf(xi: ArrayLike) -> np.ndarray:
        x = _xi(xi)
        v = np.cos(x)
        with np.errstate(divide="ignore", invalid="ignore"):
            near_one = np.log1p(-2.0 * np.sin(0.5 * x) ** 2)
            log_abs = np.where(v > 0.5, near_one, np.log(np.abs(v)))
        return _log_of_real(v, log_abs)

    return Distribution(
        name="rademacher",
        cf=cf,
        log_cf=log_cf,
        sampler=lambda rng, n: 2.0 * rng.integers(0, 2, size=n) - 1.0,
        abs_moment_order=math.inf,
        moment_fn=lambda s: 1.0,
        third_moment=0.0,
        cdf=lambda x: np.where(_xi(x) < -1.0, 0.0, np.where(_xi(x) < 1.0, 0.5, 1.0)),
    )


# -- uniform on (-sqrt3, sqrt3) ----------------------------------------------


def _uniform() -> Distribution:
    def cf(xi: ArrayLike) -> np.ndarray:
        x = _SQRT3 * _xi(xi)
        return np.sinc(x / np.pi).astype(complex)

    def log_cf(xi: ArrayLike) -> np.ndarray:
        x = _SQRT3 * _xi(xi)
        v = np.sinc(x / np.pi)
        x2 = x * x
        series = -x2 / 6.0 - x2 * x2 / 180.0 - x2 * x2 * x2 / 2835.0
        with np.errstate(divide="ignore"):
            log_abs = np.where(np.abs(x) < 1e-2, series, np.log(np.abs(v)))
        return _log_of_real(v, log_abs)

    return Distribution(
        name="uniform",
        cf=cf,
        log_cf=log_cf,
        sampler=lambda rng, n: rng.uniform(-_SQRT3, _SQRT3, size=n),
        abs_moment_order=math.inf,
        moment_fn=lambda s: _SQRT3**s / (s + 1.0),
        third_moment=0.0,
        cdf=lambda x: np.clip((_xi(x) + _SQRT3) / (2.0 * _SQRT3), 0.0, 1.0),
        pdf=lambda x: np.where(np.abs(_xi(x)) < _SQRT3, 0.5 / _SQRT3, 0.0),
    )


# -- exponential(1) shifted to mean 0 ----------------------------------------


def _exponential() -> Distribution:
    def cf(xi: ArrayLike) -> np.ndarray:
        x = _xi(xi)
        return np.exp(1j * x) / (1.0 + 1j * x)

    def log_cf(xi: ArrayLike) -> np.ndarray:
        x = _xi(xi)
        # log(1 + i x) = log1p(x^2)/2 + i*atan(x)
        return -0.5 * np.log1p(x * x) + 1j * (x - np.arctan(x))

    def moment(s: float) -> float:
        # E|E-1|^s: the part above 1 is exp(-1)*Gamma(s+1)
        head, _ = integrate.quad(lambda t: (1.0 - t) ** s * math.exp(-t), 0.0, 1.0)
        return head + math.exp(special.gammaln(s + 1.0) - 1.0)

    def cdf(x: ArrayLike) -> np.ndarray:
        z = _xi(x)
        return np.where(z < -1.0, 0.0, -np.expm1(-(np.maximum(z, -1.0) + 1.0)))

    return Distribution(
        name="exponential",
        cf=cf,
        log_cf=log_cf,
        sampler=lambda rng, n: rng.standard_exponential(n) - 1.0,
        abs_moment_order=math.inf,
        moment_fn=moment,
        third_moment=2.0,
        cdf=cdf,
        pdf=lambda x: np.where(_xi(x) >= -1.0, np.exp(-(_xi(x) + 1.0)), 0.0),
    )


# -- bernoulli(p), standardized ----------------------------------------------


def _bernoulli(p: float) -> Distribution:
    if not 0.0 < p < 1.0:
        raise DomainError(f"bernoulli parameter must lie in (0, 1), got {p}")

    sigma = math.sqrt(p * (1.0 - p))
    hi = (1.0 - p) / sigma
    lo = -p / sigma

    def log_cf(xi: ArrayLike) -> np.ndarray:
        u = _xi(xi)
        v = u / sigma
        # C(u) = exp(-i u lo) * (1 + z), z = p * (exp(-i v) - 1)
        z_re = -2.0 * p * np.sin(0.5 * v) ** 2
        z_im = -p * np.sin(v)
        with np.errstate(divide="ignore"):
            log_abs = 0.5 * np.log1p(2.0 * z_re + z_re * z_re + z_im * z_im)
        arg = np.arctan2(z_im, 1.0 + z_re)
        return log_abs + 1j * (arg - u * lo)

    def cf(xi: ArrayLike) -> np.ndarray:
        return np.exp(log_cf(xi))

    def cdf(x: ArrayLike) -> np.ndarray:
        z = _xi(x)
        return np.where(z < lo, 0.0, np.where(z < hi, 1.0 - p, 1.0))

    return Distribution(
        name=f"bernoulli:{p:g}",
        cf=cf,
        log_cf=log_cf,
        sampler=lambda rng, n: np.where(rng.random(n) < p, hi, lo),
        abs_moment_order=math.inf,
        moment_fn=lambda s: p * hi**s + (1.0 - p) * abs(lo) ** s,
        third_moment=(1.0 - 2.0 * p) / sigma,
        cdf=cdf,
    )


# -- student t(nu), standardized ---------------------------------------------


# Below this Bessel order the z^nu part of K's expansion is not negligible.
_SERIES_MIN_ORDER = 20.0
_SERIES_MAX_TERMS = 60


def _log_cf_small_z_series(order: float, z: np.ndarray) -> np.ndarray:
    """log of z^m K_m(z) / (Gamma(m) 2^(m-1)) by its regular series, for z^2 <= m.

    The k-th term is (-z^2/4)^k Gamma(m-k) / (k! Gamma(m)); the first one is
    -xi^2/2 after standardization, so log1p keeps full precision near 0.
    """
    q = -0.25 * z * z
    term = np.ones_like(z)
    total = np.zeros_like(z)
    for k in range(1, min(int(math.ceil(order)) - 1, _SERIES_MAX_TERMS) + 1):
        term = term * q / (k * (order - k))
        total += term
    return np.log1p(total)


def _log_kv_by_recurrence(order: float, z: np.ndarray) -> np.ndarray:
    """log K_order(z) by forward recurrence from the fractional order.

    Used where kve(order, z) overflows; the ratio r = K_{v+1}/K_v obeys
    r_v = 1/r_{v-1} + 2v/z, which is stable upward in v.
    """
    steps = int(math.floor(order))
    v = order - steps
    k0 = special.kve(v, z)
    log_k = np.log(k0) - z
    r = special.kve(v + 1.0, z) / k0
    log_k = log_k + np.log(r)
    for j in range(1, steps):
        r = 1.0 / r + 2.0 * (v + j) / z
        log_k = log_k + np.log(r)
    return log_k


def _student_t(nu: float) -> Distribution:
    if not nu > 2.0:
        raise DomainError(f"student_t needs nu > 2 for finite variance, got {nu}")

    scale = math.sqrt((nu - 2.0) / nu)
    order = 0.5 * nu
    log_norm = special.gammaln(order) + (order - 1.0) * math.log(2.0)
    root = math.sqrt(nu - 2.0)

    def log_cf(xi: ArrayLike) -> np.ndarray:
        # phi_T(t) = z^(nu/2) K_{nu/2}(z) / (Gamma(nu/2) 2^(nu/2-1)), z = sqrt(nu)|t|
        x = _xi(xi)
        z = root * np.abs(np.atleast_1d(x))
        out = np.zeros(z.shape)
        use_series = (z > 0.0) & (z * z <= order)
        if order < _SERIES_MIN_ORDER:
            use_series[:] = False
        if np.any(use_series):
            out[use_series] = _log_cf_small_z_series(order, z[use_series])

        direct = (z > 0.0) & ~use_series
        if np.any(direct):
            zd = z[direct]
            with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
                log_k = np.log(special.kve(order, zd)) - zd
                overflow = ~np.isfinite(log_k)
                if np.any(overflow):
                    log_k[overflow] = _log_kv_by_recurrence(order, zd[overflow])
            out[direct] = order * np.log(zd) + log_k - log_norm

        if not np.all(np.isfinite(out)):
            raise EvaluatorError(f"student_t:{nu:g} cf is not representable at some xi")
        return out.reshape(x.shape).astype(complex)

    def cf(xi: ArrayLike) -> np.ndarray:
        return np.exp(log_cf(xi))

    def moment(s: float) -> float:
        return math.exp(
            0.5 * s * math.log(nu - 2.0)
            + special.gammaln(0.5 * (s + 1.0))
            + special.gammaln(0.5 * (nu - s))
            - 0.5 * math.log(math.pi)
            - special.gammaln(order)
        )

    return Distribution(
        name=f"student_t:{nu:g}",
        cf=cf,
        log_cf=log_cf,
        sampler=lambda rng, n: scale * rng.standard_t(nu, size=n),
        abs_moment_order=nu,
        moment_fn=moment,
        third_moment=0.0 if nu > 3.0 else None,
        cdf=lambda x: stats.t.cdf(_xi(x) / scale, nu),
        pdf=lambda x: stats.t.pdf(_xi(x) / scale, nu) / scale,
    )


def make_standardized(
    family: str, params: Mapping[str, float] | None = None
) -> Distribution:
    params = dict(params or {})
    if family == "normal":
        return _normal()
    if family == "rademacher":
        return _rademacher()
    if family == "uniform":
        return _uniform()
    if family == "exponential":
        return _exponential()
    if family == "bernoulli":
        if "p" not in params:
            raise DomainError("bernoulli requires parameter p")
        return _bernoulli(float(params["p"]))
    if family == "student_t":
        if "nu" not in params:
            raise DomainError("student_t requires parameter nu")
        return _student_t(float(params["nu"]))
    raise ConfigError(
        f"unknown distribution family: {family} (expected one of {', '.join(FAMILIES)})"
    )


def parse_distribution(name: str) -> Distribution:
    """Build a catalog law from its CLI name, e.g. ``student_t:2.5``."""
    text = name.strip().lower()
    if not text:
        raise ConfigError("empty distribution name")

    family, _, arg = text.partition(":")
    if family in ("bernoulli", "student_t"):
        if not arg:
            raise ConfigError(f"{family} needs a parameter, e.g. {family}:0.3")
        try:
            value = float(arg)
        except ValueError:
            raise ConfigError(f"invalid parameter for {family}: {arg}")
        key = "p" if family == "bernoulli" else "nu"
        return make_standardized(family, {key: value})

    if arg:
        raise ConfigError(f"{family} takes no parameter (got '{arg}')")
    return make_standardized(family)


def catalog_names() -> list[str]:
    return [
        "normal",
        "rademacher",
        "uniform",
        "exponential",
        "bernoulli:0.3",
        "student_t:2.5",
    ]


def abs_moment(dist: Distribution, s: float) -> float:
    if not s > 0.0:
        raise DomainError(f"moment order must be positive, got {s}")
    if s >= dist.abs_moment_order:
        return math.inf
    return float(dist.moment_fn(s))


def sample(dist: Distribution, n: int, seed: int, *, jobs: int = 1) -> np.ndarray:
    if n < 1:
        raise DomainError(f"sample count must be >= 1, got {n}")
    return draw_blocks(dist.sampler, n, seed=seed, stream=STREAM_SAMPLE, jobs=jobs)


def symmetric_cf_by_quadrature(pdf: CdfFn, xi: float) -> float:
    """cf of a symmetric density as 2 * int_0^inf cos(xi x) pdf(x) dx."""
    if xi == 0.0:
        return 1.0
    value, _ = integrate.quad(
        lambda x: float(pdf(x)), 0.0, np.inf, weight="cos", wvar=abs(xi),
        limlst=200,
    )
    return 2.0 * value
