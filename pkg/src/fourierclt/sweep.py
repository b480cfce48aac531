"""Bound sweep over discount factors: one BoundReport row per a."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from scipy import special

from fourierclt import ui
from fourierclt.bounds import (
    envelope_sup,
    gerber_bound,
    kolmogorov_from_d2,
    lemma2_search,
    theorem3_bound,
)
from fourierclt.charfn import CharFn, discounted_product_cf, from_distribution, gaussian_cf
from fourierclt.config import SweepConfig
from fourierclt.discounted import SimConfig, simulate_discounted
from fourierclt.distributions import Distribution, abs_moment, parse_distribution
from fourierclt.errors import BoundUnavailableError
from fourierclt.metrics import MetricResult, fourier_distance, kolmogorov_distance
from fourierclt.report import BoundReport


def _row(
    dist: Distribution,
    f_cf: CharFn,
    ds: MetricResult,
    cfg: SweepConfig,
    a: float,
) -> BoundReport:
    phi = gaussian_cf()
    fa = discounted_product_cf(f_cf, a, cfg.trunc_tol)
    d2 = fourier_distance(fa, phi, 2.0, cfg.grid)
    l2 = lemma2_search(f_cf, a, cfg.grid)

    epsilon = d2.error_estimate + l2.error_estimate
    t3: float | None = None
    if 2.0 < cfg.s <= 3.0:
        t3 = theorem3_bound(a, cfg.s, ds.value)
        epsilon += envelope_sup(a, cfg.s)[1] * ds.error_estimate

    samples = simulate_discounted(
        dist, SimConfig(a=a, n_samples=cfg.n_samples, trunc_tol=cfg.trunc_tol, seed=cfg.seed)
    )
    km = kolmogorov_distance(samples, special.ndtr)

    try:
        gerber: float | None = gerber_bound(a, abs_moment(dist, 3.0))
    except BoundUnavailableError:
        gerber = None

    ui.log(f"a={a:g}: d2={d2.value:.3e} lemma2={l2.value:.3e} kolmogorov={km:.3e}")

    return BoundReport(
        a=a,
        s=cfg.s,
        ds_F_Phi=ds.value,
        d2_measured=d2.value,
        lemma2_bound=l2.value,
        theorem3_bound=t3,
        kolmogorov_measured=km,
        gerber_bound=gerber,
        kolmogorov_from_d2=kolmogorov_from_d2(d2.value),
        n_samples=cfg.n_samples,
        seed=cfg.seed,
        trunc_tol=cfg.trunc_tol,
        epsilon=epsilon,
    )


def run_sweep(cfg: SweepConfig) -> list[BoundReport]:
    """Rows in ascending a; independent of ``cfg.jobs``."""
    dist = parse_distribution(cfg.distribution)
    f_cf = from_distribution(dist)
    ds = fourier_distance(f_cf, gaussian_cf(), cfg.s, cfg.grid)
    ui.log(f"{dist.name}: d_{cfg.s:g}(F, Phi)={ds.value:.6g} at xi={ds.argmax_xi:.4g}")

    a_values = sorted(cfg.a_values)
    if cfg.jobs == 1:
        return [_row(dist, f_cf, ds, cfg, a) for a in a_values]

    with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
        return list(pool.map(lambda a: _row(dist, f_cf, ds, cfg, a), a_values))
