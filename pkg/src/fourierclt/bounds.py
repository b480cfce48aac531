"""Quantitative bounds for the discounted central limit theorem.

For F in P^s, s in (2, 3], a in (0, 1):

    d_2(F_a, Phi) <= sup_w exp(-(a w)^2 / (2 (1 - a^2))) |C_F(w) - C_Phi(w)| / w^2
                  <= [(s - 2)(1 - a^2) / (e a^2)]^((s - 2)/2) * d_s(F, Phi)

and in the Kolmogorov metric
sup|F_a - Phi| <= 5.4 * E|X|^3 * (1 - a)^(1/2)  and  <= 3 * 12^(2/3) / pi * d_2^(1/3).
"""

from __future__ import annotations

import math

import numpy as np

from fourierclt.charfn import CharFn, apply_ta, gaussian_cf
from fourierclt.constants import GERBER_CONSTANT, KOLMOGOROV_D2_CONSTANT, ROUNDOFF_FLOOR
from fourierclt.errors import BoundUnavailableError, DomainError
from fourierclt.grid import GridSpec, standard_grid
from fourierclt.metrics import MetricResult, fourier_distance, search_sup


def _check_open_unit(a: float) -> None:
    if not 0.0 < a < 1.0:
        raise DomainError(f"discount factor must lie in (0, 1), got {a}")


def theorem3_bound(a: float, s: float, ds_f_phi: float) -> float:
    _check_open_unit(a)
    if not 2.0 < s <= 3.0:
        raise DomainError(f"the d_s rate bound needs s in (2, 3], got {s}")
    if ds_f_phi < 0.0:
        raise DomainError(f"d_s(F, Phi) must be non-negative, got {ds_f_phi}")
    base = (s - 2.0) * (1.0 - a * a) / (math.e * a * a)
    return base ** (0.5 * (s - 2.0)) * ds_f_phi


def envelope_sup(a: float, s: float) -> tuple[float, float]:
    """Maximizer and value of exp(-(a w)^2 / (2 (1 - a^2))) |w|^(s-2) over w > 0.

    For s = 2 the sup is the w -> 0 limit; the maximizer is reported as 0.
    """
    _check_open_unit(a)
    if not 2.0 <= s <= 3.0:
        raise DomainError(f"envelope order must lie in [2, 3], got {s}")
    if s == 2.0:
        return 0.0, 1.0
    w_star = math.sqrt((s - 2.0) * (1.0 - a * a)) / a
    value = ((s - 2.0) * (1.0 - a * a) / (math.e * a * a)) ** (0.5 * (s - 2.0))
    return w_star, value


def envelope(a: float, w: np.ndarray) -> np.ndarray:
    return np.exp(-((a * w) ** 2) / (2.0 * (1.0 - a * a)))


def lemma2_search(f_cf: CharFn, a: float, grid: GridSpec | None = None) -> MetricResult:
    if not 0.0 <= a < 1.0:
        raise DomainError(f"discount factor must lie in [0, 1), got {a}")
    grid = grid or standard_grid()
    phi = gaussian_cf()

    def ratio(w: np.ndarray) -> np.ndarray:
        return envelope(a, w) * np.abs(f_cf(w) - phi(w)) / (w * w)

    def error_at(x: float) -> float:
        err = float(f_cf.error_at(np.asarray(x))) + 2.0 * ROUNDOFF_FLOOR
        return err / (x * x)

    # |C_F - C_Phi| <= 2 and the envelope decreases, so the tail is at most 2/w^2.
    return search_sup(
        ratio,
        grid,
        s=2.0,
        tail_bound=lambda x: 2.0 * float(envelope(a, np.asarray(x))) / (x * x),
        error_at=error_at,
        limit_at_zero=None if f_cf.from_samples else 0.0,
    )


def lemma2_bound(f_cf: CharFn, a: float, grid: GridSpec | None = None) -> float:
    return lemma2_search(f_cf, a, grid).value


def lemma1iii_bound(
    g_cf: CharFn, f_cf: CharFn, a: float, grid: GridSpec | None = None
) -> float:
    """A-priori bound d_2(G, F_a) <= d_2(G, T_a[G]) / (1 - a^2)."""
    _check_open_unit(a)
    d = fourier_distance(g_cf, apply_ta(f_cf, g_cf, a), 2.0, grid)
    return d.value / (1.0 - a * a)


def gerber_bound(a: float, rho3: float) -> float:
    _check_open_unit(a)
    if not math.isfinite(rho3):
        raise BoundUnavailableError(
            "Kolmogorov rate bound needs a finite third absolute moment"
        )
    if rho3 < 0.0:
        raise DomainError(f"third absolute moment must be non-negative, got {rho3}")
    return GERBER_CONSTANT * rho3 * math.sqrt(1.0 - a)


def kolmogorov_from_d2(d2: float) -> float:
    if d2 < 0.0:
        raise DomainError(f"d_2 must be non-negative, got {d2}")
    return KOLMOGOROV_D2_CONSTANT * d2 ** (1.0 / 3.0)
