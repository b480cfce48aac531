"""Monte Carlo for the normalized discounted sum and the T_a fixed point.

Two samplers are provided: direct truncation of sqrt(1-a^2) * sum a^n X_n at
tail variance ``trunc_tol``, and independent AR(1) trajectories
Y_{n+1} = a Y_n + sqrt(1-a^2) X_n, whose n-step law is T_a^n of the initial law.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from fourierclt.charfn import CharFn, apply_ta, ta_power
from fourierclt.constants import DEFAULT_SEED, DEFAULT_TRUNC_TOL
from fourierclt.distributions import Distribution, parse_distribution
from fourierclt.errors import DomainError
from fourierclt.grid import GridSpec
from fourierclt.metrics import MetricResult, fourier_distance
from fourierclt.rng import STREAM_AR1, STREAM_DISCOUNTED, draw_blocks

Method = Literal["direct_truncation", "ar1_iteration"]
METHODS: tuple[str, ...] = ("direct_truncation", "ar1_iteration")


@dataclass(frozen=True)
class SimConfig:
    a: float
    n_samples: int
    trunc_tol: float = DEFAULT_TRUNC_TOL
    seed: int = DEFAULT_SEED
    method: Method = "direct_truncation"
    # ar1_iteration only
    steps: int = 0
    initial: str = "normal"

    def __post_init__(self) -> None:
        if not 0.0 <= self.a < 1.0:
            raise DomainError(f"discount factor must lie in [0, 1), got {self.a}")
        if not 0.0 < self.trunc_tol < 1.0:
            raise DomainError(f"trunc_tol must lie in (0, 1), got {self.trunc_tol}")
        if self.n_samples < 1:
            raise DomainError(f"n_samples must be >= 1, got {self.n_samples}")
        if self.method not in METHODS:
            raise DomainError(
                f"unknown method: {self.method} (expected {' or '.join(METHODS)})"
            )
        if self.steps < 0:
            raise DomainError(f"steps must be >= 0, got {self.steps}")
        if self.seed < 0:
            raise DomainError(f"seed must be non-negative, got {self.seed}")


def truncation_length(a: float, tol: float) -> int:
    """Smallest N with a^(2N) <= tol: the neglected normalized tail variance."""
    if a >= 1.0:
        raise DomainError(f"discount factor {a} has a divergent horizon")
    if a < 0.0:
        raise DomainError(f"discount factor must be non-negative, got {a}")
    if not tol > 0.0:
        raise DomainError(f"truncation tolerance must be positive, got {tol}")
    if a == 0.0 or tol >= 1.0:
        return 1

    n = max(1, int(math.ceil(math.log(tol) / (2.0 * math.log(a)))))
    # log rounding can be off by one near exact powers
    while a ** (2 * n) > tol:
        n += 1
    while n > 1 and a ** (2 * (n - 1)) <= tol:
        n -= 1
    return n


def simulate_discounted(
    dist: Distribution, cfg: SimConfig, *, jobs: int = 1
) -> np.ndarray:
    if cfg.method != "direct_truncation":
        raise DomainError("simulate_discounted needs method=direct_truncation")

    a = cfg.a
    n_terms = truncation_length(a, cfg.trunc_tol)
    c = math.sqrt(1.0 - a * a)

    def fill(rng: np.random.Generator, size: int) -> np.ndarray:
        # Horner from the smallest weight a^(N-1) up to a^0, in extended precision.
        acc = np.zeros(size, dtype=np.longdouble)
        for _ in range(n_terms):
            acc = a * acc + dist.sampler(rng, size)
        return (c * acc).astype(float)

    return draw_blocks(fill, cfg.n_samples, seed=cfg.seed, stream=STREAM_DISCOUNTED, jobs=jobs)


def ar1_iterate(
    dist: Distribution,
    initial: Distribution,
    a: float,
    steps: int,
    cfg: SimConfig,
    *,
    jobs: int = 1,
) -> np.ndarray:
    """Independent trajectories of Y_{n+1} = a Y_n + sqrt(1-a^2) X_n; returns Y_steps."""
    if not 0.0 <= a < 1.0:
        raise DomainError(f"discount factor must lie in [0, 1), got {a}")
    if steps < 0:
        raise DomainError(f"steps must be >= 0, got {steps}")

    c = math.sqrt(1.0 - a * a)

    def fill(rng: np.random.Generator, size: int) -> np.ndarray:
        y = np.asarray(initial.sampler(rng, size), dtype=float)
        for _ in range(steps):
            y = a * y + c * dist.sampler(rng, size)
        return y

    return draw_blocks(fill, cfg.n_samples, seed=cfg.seed, stream=STREAM_AR1, jobs=jobs)


def simulate(dist: Distribution, cfg: SimConfig, *, jobs: int = 1) -> np.ndarray:
    if cfg.method == "direct_truncation":
        return simulate_discounted(dist, cfg, jobs=jobs)
    initial = parse_distribution(cfg.initial)
    return ar1_iterate(dist, initial, cfg.a, cfg.steps, cfg, jobs=jobs)


def fixed_point_residual(
    fa_cf: CharFn, f_cf: CharFn, a: float, grid: GridSpec | None = None
) -> float:
    """d_2(F_a, T_a[F_a]); zero for the exact fixed point."""
    return fourier_distance(fa_cf, apply_ta(f_cf, fa_cf, a), 2.0, grid).value


def contraction_ratio(
    g: CharFn,
    h: CharFn,
    f_cf: CharFn,
    a: float,
    n: int = 1,
    grid: GridSpec | None = None,
) -> tuple[MetricResult, MetricResult]:
    """Return (d_2(G, H), d_2(T_a^n G, T_a^n H)); the second is at most a^(2n) times the first."""
    before = fourier_distance(g, h, 2.0, grid)
    after = fourier_distance(ta_power(f_cf, g, a, n), ta_power(f_cf, h, a, n), 2.0, grid)
    return before, after
