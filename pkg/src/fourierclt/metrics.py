"""Fourier distance d_s and Kolmogorov distance.

d_s(G, H) = sup_{xi != 0} |C_G(xi) - C_H(xi)| / |xi|^s is computed on the
positive half-line only (Hermitian symmetry), by a log-spaced grid scan,
bounded Brent refinement around the best cells, an analytic xi -> 0 limit
for analytic inputs, and a tail cut where 2/xi^s drops below the running max.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Callable

import numpy as np
from numpy.typing import ArrayLike
from scipy import optimize, stats

from fourierclt.charfn import CharFn
from fourierclt.constants import (
    DKW_ALPHA,
    MAX_REFINED_CANDIDATES,
    ROUNDOFF_FLOOR,
    XI_HARD_MAX,
)
from fourierclt.errors import DomainError, EvaluatorError
from fourierclt.grid import GridSpec, standard_grid

RatioFn = Callable[[np.ndarray], np.ndarray]

# Grid cells within this fraction of the best cell are refined as well.
_TIE_BAND = 0.9


@dataclass(frozen=True)
class MetricResult:
    value: float
    argmax_xi: float
    s: float
    grid_points: int
    refinement_steps: int
    error_estimate: float

    def to_dict(self) -> dict[str, float | int]:
        return asdict(self)


def _refine(
    f: Callable[[float], float], lo: float, hi: float, rel_tol: float
) -> tuple[float, float, int]:
    if not (math.isfinite(lo) and math.isfinite(hi)) or not lo < hi:
        raise DomainError(f"invalid bracket [{lo}, {hi}]")

    f_lo = f(lo)
    f_hi = f(hi)
    xatol = rel_tol * max(abs(lo), abs(hi))
    res = optimize.minimize_scalar(
        lambda x: -f(x), bounds=(lo, hi), method="bounded", options={"xatol": xatol}
    )
    best_x, best_v = float(res.x), -float(res.fun)
    nfev = int(res.nfev) + 2

    if f_hi > best_v:
        best_x, best_v = hi, f_hi
    if f_lo >= best_v:
        best_x, best_v = lo, f_lo
    return best_x, best_v, nfev


def refine_sup(
    f: Callable[[float], float],
    bracket: tuple[float, float],
    rel_tol: float = 1e-6,
) -> tuple[float, float]:
    """Local maximizer of ``f`` inside ``bracket``; never below the endpoints."""
    lo, hi = float(bracket[0]), float(bracket[1])
    x, v, _ = _refine(f, lo, hi, rel_tol)
    return x, v


def _evaluate(ratio: RatioFn, xi: np.ndarray) -> np.ndarray:
    vals = np.asarray(ratio(xi), dtype=float)
    if not np.all(np.isfinite(vals)):
        raise EvaluatorError("characteristic function returned non-finite values")
    return vals


def search_sup(
    ratio: RatioFn,
    grid: GridSpec,
    *,
    s: float,
    tail_bound: Callable[[float], float],
    error_at: Callable[[float], float],
    limit_at_zero: float | None = None,
) -> MetricResult:
    """Maximize a nonnegative ratio over xi > 0.

    ``tail_bound(x)`` must bound the ratio for all xi >= x and decrease in x;
    ``error_at(x)`` is the input-error contribution at a point.
    """
    xi = grid.positive()
    vals = _evaluate(ratio, xi)

    x_end = grid.xi_max
    per_decade = grid.per_decade()
    while tail_bound(x_end) > float(vals.max()) and x_end < XI_HARD_MAX:
        nxt = min(10.0 * x_end, XI_HARD_MAX)
        k = max(2, int(math.ceil(per_decade * math.log10(nxt / x_end))))
        ext = np.geomspace(x_end, nxt, k + 1)[1:]
        xi = np.concatenate([xi, ext])
        vals = np.concatenate([vals, _evaluate(ratio, ext)])
        x_end = nxt
    top = float(vals.max())
    tail_slack = max(0.0, tail_bound(x_end) - top)

    def scalar(x: float) -> float:
        return float(_evaluate(ratio, np.array([x]))[0])

    best_x = float(xi[int(np.argmax(vals))])
    best_v = top
    steps = 0
    if top > 0.0:
        left = np.concatenate([[-np.inf], vals[:-1]])
        right = np.concatenate([vals[1:], [-np.inf]])
        peaks = np.flatnonzero((vals >= left) & (vals >= right) & (vals >= _TIE_BAND * top))
        peaks = peaks[np.argsort(-vals[peaks], kind="stable")][:MAX_REFINED_CANDIDATES]
        for i in peaks:
            lo = float(xi[max(i - 1, 0)])
            hi = float(xi[min(i + 1, xi.size - 1)])
            x, v, nfev = _refine(scalar, lo, hi, grid.refine_tol)
            steps += nfev
            if v > best_v:
                best_x, best_v = x, v

    grid_err = max(best_v - top, grid.refine_tol * best_v)

    if limit_at_zero is not None and limit_at_zero > best_v:
        best_x, best_v = 0.0, float(limit_at_zero)

    at = best_x if best_x > 0.0 else float(xi[0])
    error = grid_err + float(error_at(at)) + tail_slack

    return MetricResult(
        value=float(best_v),
        argmax_xi=float(best_x),
        s=float(s),
        grid_points=int(xi.size),
        refinement_steps=int(steps),
        error_estimate=float(error),
    )


def _check_order(s: float) -> None:
    if not 2.0 <= s <= 3.0:
        raise DomainError(f"Fourier distance order must lie in [2, 3], got {s}")


def _zero_limit(g: CharFn, h: CharFn, s: float) -> float | None:
    if g.from_samples or h.from_samples:
        return None
    if s < 3.0:
        # matched first and second moments: |C_G - C_H| = o(xi^2)
        return 0.0
    if g.third_moment is None or h.third_moment is None:
        return None
    return abs(g.third_moment - h.third_moment) / 6.0


def fourier_distance(
    g: CharFn, h: CharFn, s: float, grid: GridSpec | None = None
) -> MetricResult:
    _check_order(s)
    grid = grid or standard_grid()

    def ratio(xi: np.ndarray) -> np.ndarray:
        return np.abs(g(xi) - h(xi)) / xi**s

    def error_at(x: float) -> float:
        pt = np.asarray(x)
        err = g.error_at(pt) + h.error_at(pt) + 2.0 * ROUNDOFF_FLOOR
        return float(err) / x**s

    return search_sup(
        ratio,
        grid,
        s=s,
        tail_bound=lambda x: 2.0 / x**s,
        error_at=error_at,
        limit_at_zero=_zero_limit(g, h, s),
    )


def kolmogorov_distance(samples: ArrayLike, cdf: Callable[[np.ndarray], ArrayLike]) -> float:
    x = np.asarray(samples, dtype=float).ravel()
    if x.size == 0:
        raise DomainError("kolmogorov distance needs at least one sample")
    res = stats.ks_1samp(x, lambda v: np.asarray(cdf(v), dtype=float), method="asymp")
    return float(res.statistic)


def dkw_radius(n: int, alpha: float = DKW_ALPHA) -> float:
    """Dvoretzky-Kiefer-Wolfowitz confidence radius for an empirical CDF."""
    if n < 1:
        raise DomainError(f"sample count must be >= 1, got {n}")
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")
    return math.sqrt(math.log(2.0 / alpha) / (2.0 * n))
