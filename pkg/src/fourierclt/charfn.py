"""Evaluable characteristic functions.

A ``CharFn`` wraps a vectorized evaluator together with a pointwise error
bound. Four kinds exist: analytic cfs of catalog laws, empirical cfs of
samples, the truncated infinite product giving the cf of the normalized
discounted sum, and the T_a transform

    C_{T_a[G]}(xi) = C_F(sqrt(1 - a^2) xi) * C_G(a xi).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Literal

import numpy as np
from numpy.typing import ArrayLike

from fourierclt.constants import DEFAULT_XI_MAX, EMPIRICAL_ERROR_CONSTANT
from fourierclt.distributions import Distribution, make_standardized
from fourierclt.errors import DomainError

Kind = Literal["analytic", "empirical", "discounted_product", "ta_transform"]
CfFn = Callable[[ArrayLike], np.ndarray]
ErrorFn = Callable[[np.ndarray], np.ndarray]

# Caps the size of intermediate (terms x points) and (points x samples) arrays.
_PRODUCT_BLOCK = 256
_EMPIRICAL_BLOCK = 4_000_000


def _zero_error(xi: np.ndarray) -> np.ndarray:
    return np.zeros(np.shape(xi))


@dataclass(frozen=True)
class CharFn:
    kind: Kind
    evaluator: CfFn = field(repr=False)
    meta: dict[str, Any]
    # Uniform bound on |evaluator - true cf| over |xi| <= DEFAULT_XI_MAX.
    error_bound: float | None = None
    error_fn: ErrorFn = field(default=_zero_error, repr=False)
    log_evaluator: CfFn | None = field(default=None, repr=False)
    third_moment: float | None = None
    # True when any ingredient is an empirical cf; no analytic xi -> 0 limit then.
    from_samples: bool = False

    def __call__(self, xi: ArrayLike) -> np.ndarray:
        return self.evaluator(xi)

    def error_at(self, xi: ArrayLike) -> np.ndarray:
        return self.error_fn(np.abs(np.asarray(xi, dtype=float)))

    def log_at(self, xi: ArrayLike) -> np.ndarray:
        if self.log_evaluator is not None:
            return self.log_evaluator(xi)
        with np.errstate(divide="ignore"):
            return np.log(self.evaluator(xi).astype(complex))


def from_distribution(dist: Distribution) -> CharFn:
    return CharFn(
        kind="analytic",
        evaluator=dist.cf,
        meta={"source": dist.name},
        error_bound=0.0,
        log_evaluator=dist.log_cf,
        third_moment=dist.third_moment,
    )


def gaussian_cf() -> CharFn:
    return from_distribution(make_standardized("normal"))


def empirical_cf(samples: ArrayLike, restandardize: bool = False) -> CharFn:
    x = np.asarray(samples, dtype=float).ravel()
    if x.size == 0:
        raise DomainError("empirical cf needs at least one sample")

    if restandardize:
        sd = float(x.std())
        if sd == 0.0:
            raise DomainError("cannot restandardize samples with zero variance")
        x = (x - x.mean()) / sd

    n = x.size
    step = max(1, _EMPIRICAL_BLOCK // n)

    def evaluator(xi: ArrayLike) -> np.ndarray:
        q = np.asarray(xi, dtype=float)
        flat = q.ravel()
        out = np.empty(flat.size, dtype=complex)
        for i in range(0, flat.size, step):
            phase = np.outer(flat[i : i + step], x)
            out[i : i + step] = np.cos(phase).mean(axis=1) - 1j * np.sin(phase).mean(
                axis=1
            )
        return out.reshape(q.shape)

    bound = EMPIRICAL_ERROR_CONSTANT / math.sqrt(n)

    return CharFn(
        kind="empirical",
        evaluator=evaluator,
        meta={"samples": int(n), "restandardized": bool(restandardize)},
        error_bound=bound,
        error_fn=lambda xi: np.full(np.shape(xi), bound),
        third_moment=float(np.mean(x**3)),
        from_samples=True,
    )


def discounted_product_cf(base: CharFn, a: float, tol: float) -> CharFn:
    """cf of the normalized discounted sum, truncated at tail variance ``tol``."""
    from fourierclt.discounted import truncation_length

    if not 0.0 < a < 1.0:
        raise DomainError(f"discount factor must lie in (0, 1), got {a}")
    if not tol > 0.0:
        raise DomainError(f"truncation tolerance must be positive, got {tol}")

    n_terms = truncation_length(a, tol)
    c = math.sqrt(1.0 - a * a)
    weights = c * a ** np.arange(n_terms, dtype=float)
    tail = a ** (2 * n_terms)
    base_err = float(base.error_bound or 0.0)

    def log_evaluator(xi: ArrayLike) -> np.ndarray:
        q = np.asarray(xi, dtype=float)
        flat = q.ravel()
        acc = np.zeros(flat.size, dtype=complex)
        for start in range(0, n_terms, _PRODUCT_BLOCK):
            w = weights[start : start + _PRODUCT_BLOCK]
            acc += base.log_at(np.outer(w, flat)).sum(axis=0)
        return acc.reshape(q.shape)

    def evaluator(xi: ArrayLike) -> np.ndarray:
        return np.exp(log_evaluator(xi))

    # |C(u) - 1| <= u^2/2 for a standardized law bounds the neglected factors.
    def error_fn(xi: np.ndarray) -> np.ndarray:
        return np.minimum(2.0, 0.5 * tail * xi * xi + n_terms * base_err)

    third = None
    if base.third_moment is not None:
        third = c**3 * base.third_moment * (1.0 - a ** (3 * n_terms)) / (1.0 - a**3)

    return CharFn(
        kind="discounted_product",
        evaluator=evaluator,
        meta={"a": a, "tol": tol, "terms": n_terms, "base": base.meta},
        error_bound=float(error_fn(np.asarray(DEFAULT_XI_MAX))),
        error_fn=error_fn,
        log_evaluator=log_evaluator,
        third_moment=third,
        from_samples=base.from_samples,
    )


def apply_ta(base: CharFn, g: CharFn, a: float) -> CharFn:
    if not 0.0 <= a < 1.0:
        raise DomainError(f"discount factor must lie in [0, 1), got {a}")

    c = math.sqrt(1.0 - a * a)

    def evaluator(xi: ArrayLike) -> np.ndarray:
        x = np.asarray(xi, dtype=float)
        return base(c * x) * g(a * x)

    def log_evaluator(xi: ArrayLike) -> np.ndarray:
        x = np.asarray(xi, dtype=float)
        return base.log_at(c * x) + g.log_at(a * x)

    def error_fn(xi: np.ndarray) -> np.ndarray:
        return np.minimum(2.0, base.error_fn(c * xi) + g.error_fn(a * xi))

    third = None
    if base.third_moment is not None and g.third_moment is not None:
        third = c**3 * base.third_moment + a**3 * g.third_moment

    return CharFn(
        kind="ta_transform",
        evaluator=evaluator,
        meta={"a": a, "base": base.meta, "inner": g.meta},
        error_bound=float(error_fn(np.asarray(DEFAULT_XI_MAX))),
        error_fn=error_fn,
        log_evaluator=log_evaluator,
        third_moment=third,
        from_samples=base.from_samples or g.from_samples,
    )


def ta_power(base: CharFn, g: CharFn, a: float, n: int) -> CharFn:
    """T_a applied ``n`` times to ``g``; the cf of the AR(1) state Y_n."""
    if n < 0:
        raise DomainError(f"number of T_a applications must be >= 0, got {n}")
    out = g
    for _ in range(n):
        out = apply_ta(base, out, a)
    return out
