import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fourierclt.charfn import (
    discounted_product_cf,
    empirical_cf,
    from_distribution,
    gaussian_cf,
    ta_power,
)
from fourierclt.discounted import (
    SimConfig,
    ar1_iterate,
    contraction_ratio,
    fixed_point_residual,
    simulate,
    simulate_discounted,
    truncation_length,
)
from fourierclt.distributions import parse_distribution
from fourierclt.errors import ConfigError, DomainError
from fourierclt.metrics import fourier_distance


def test_truncation_length_examples():
    assert truncation_length(0.5, 0.25) == 1
    assert truncation_length(0.99, 1e-8) == 917
    assert truncation_length(0.0, 1e-8) == 1
    assert truncation_length(0.9, 1.0) == 1


@pytest.mark.parametrize(("a", "tol"), [(1.0, 1e-8), (1.5, 1e-8), (-0.1, 1e-8), (0.5, 0.0)])
def test_truncation_length_rejects_bad_parameters(a, tol):
    with pytest.raises(DomainError):
        truncation_length(a, tol)


@settings(max_examples=200, deadline=None)
@given(
    a=st.floats(min_value=0.01, max_value=0.9999),
    tol=st.floats(min_value=1e-14, max_value=0.5),
)
def test_truncation_length_is_minimal(a, tol):
    n = truncation_length(a, tol)
    assert a ** (2 * n) <= tol
    if n > 1:
        assert a ** (2 * (n - 1)) > tol


@pytest.mark.parametrize(
    ("kwargs", "match"),
    [
        ({"a": 1.0}, r"\[0, 1\)"),
        ({"trunc_tol": 0.0}, r"trunc_tol"),
        ({"n_samples": 0}, r"n_samples"),
        ({"method": "euler"}, r"unknown method"),
        ({"steps": -1}, r"steps"),
        ({"seed": -3}, r"seed"),
    ],
)
def test_sim_config_validation(kwargs, match):
    base = {"a": 0.5, "n_samples": 10}
    base.update(kwargs)
    with pytest.raises(DomainError, match=match):
        SimConfig(**base)


def test_zero_discount_reproduces_the_innovation_law():
    out = simulate_discounted(parse_distribution("rademacher"), SimConfig(a=0.0, n_samples=1000))
    assert set(out.tolist()) == {-1.0, 1.0}


def test_gaussian_innovations_stay_gaussian():
    n = 200_000
    out = simulate_discounted(
        parse_distribution("normal"), SimConfig(a=0.9, n_samples=n, trunc_tol=1e-10, seed=4)
    )
    assert abs(float(np.var(out)) - 1.0) <= 3.0 * math.sqrt(2.0 / n)


def test_rademacher_discounted_moments():
    n = 200_000
    out = simulate_discounted(
        parse_distribution("rademacher"), SimConfig(a=0.99, n_samples=n, seed=9)
    )
    assert abs(float(np.mean(out))) <= 4.0 / math.sqrt(n)
    assert abs(float(np.var(out)) - 1.0) <= 4.0 * math.sqrt(2.0 / n) + 1e-8


def test_simulation_is_deterministic_and_independent_of_jobs():
    dist = parse_distribution("exponential")
    cfg = SimConfig(a=0.8, n_samples=150_000, seed=21)
    first = simulate_discounted(dist, cfg)
    np.testing.assert_array_equal(first, simulate_discounted(dist, cfg))
    np.testing.assert_array_equal(first, simulate_discounted(dist, cfg, jobs=3))


def test_simulate_discounted_needs_direct_method():
    cfg = SimConfig(a=0.5, n_samples=10, method="ar1_iteration")
    with pytest.raises(DomainError, match=r"direct_truncation"):
        simulate_discounted(parse_distribution("normal"), cfg)


def test_ar1_without_steps_returns_initial_draws():
    cfg = SimConfig(a=0.7, n_samples=500, method="ar1_iteration")
    out = ar1_iterate(
        parse_distribution("normal"), parse_distribution("rademacher"), 0.7, 0, cfg
    )
    assert set(out.tolist()) == {-1.0, 1.0}


def test_ar1_gaussian_fixed_point():
    n = 200_000
    normal = parse_distribution("normal")
    cfg = SimConfig(a=0.8, n_samples=n, method="ar1_iteration", steps=25)
    out = simulate(normal, cfg)
    assert abs(float(np.var(out)) - 1.0) <= 4.0 * math.sqrt(2.0 / n)


def test_simulate_starts_ar1_from_configured_law():
    normal = parse_distribution("normal")
    cfg = SimConfig(a=0.5, n_samples=200, method="ar1_iteration", initial="rademacher")
    assert set(simulate(normal, cfg).tolist()) == {-1.0, 1.0}

    bad = SimConfig(a=0.5, n_samples=10, method="ar1_iteration", steps=3, initial="cauchy")
    with pytest.raises(ConfigError, match=r"unknown distribution"):
        simulate(normal, bad)


def test_ar1_rejects_bad_arguments():
    cfg = SimConfig(a=0.5, n_samples=10)
    normal = parse_distribution("normal")
    with pytest.raises(DomainError):
        ar1_iterate(normal, normal, 1.0, 3, cfg)
    with pytest.raises(DomainError):
        ar1_iterate(normal, normal, 0.5, -1, cfg)


def test_ar1_iterates_approach_the_discounted_law():
    a, n = 0.9, 200_000
    f = parse_distribution("rademacher")
    fa = discounted_product_cf(from_distribution(f), a, 1e-12)

    def distance(steps: int) -> float:
        cfg = SimConfig(
            a=a,
            n_samples=n,
            method="ar1_iteration",
            steps=steps,
            seed=5,
            initial="exponential",
        )
        y = simulate(f, cfg)
        return fourier_distance(empirical_cf(y, restandardize=True), fa, 2.0).value

    assert distance(40) < distance(2)


def test_composed_operator_contracts_toward_fixed_point():
    a = 0.9
    f = from_distribution(parse_distribution("rademacher"))
    g = from_distribution(parse_distribution("exponential"))
    fa = discounted_product_cf(f, a, 1e-12)

    d10 = fourier_distance(ta_power(f, g, a, 10), fa, 2.0).value
    d40 = fourier_distance(ta_power(f, g, a, 40), fa, 2.0).value
    assert d40 < d10


def test_fixed_point_residuals():
    phi = gaussian_cf()
    assert fixed_point_residual(phi, phi, 0.7) <= 5e-9

    f = from_distribution(parse_distribution("exponential"))
    assert fixed_point_residual(f, f, 0.0) == 0.0

    for name in ("rademacher", "exponential"):
        f = from_distribution(parse_distribution(name))
        for a in (0.5, 0.9):
            fa = discounted_product_cf(f, a, 1e-12)
            assert fixed_point_residual(fa, f, a) <= 5e-9


_LAWS = ("normal", "rademacher", "uniform", "exponential")


@settings(max_examples=20, deadline=None)
@given(
    pair=st.tuples(st.sampled_from(_LAWS), st.sampled_from(_LAWS)).filter(
        lambda p: p[0] != p[1]
    ),
    base=st.sampled_from(_LAWS),
    a=st.sampled_from((0.3, 0.6, 0.9)),
)
def test_contraction_on_random_pairs(pair, base, a):
    g = from_distribution(parse_distribution(pair[0]))
    h = from_distribution(parse_distribution(pair[1]))
    f = from_distribution(parse_distribution(base))

    before, after = contraction_ratio(g, h, f, a)
    assert after.value <= a * a * (before.value + before.error_estimate) + 2.0 * after.error_estimate


def test_iterated_contraction():
    a, n = 0.6, 3
    g = from_distribution(parse_distribution("uniform"))
    h = from_distribution(parse_distribution("exponential"))
    f = from_distribution(parse_distribution("rademacher"))

    before, after = contraction_ratio(g, h, f, a, n)
    assert before.value > 0.0
    assert after.value <= a ** (2 * n) * (before.value + before.error_estimate) + 1e-12


@pytest.mark.parametrize("steps", [1, 5, 20])
def test_composed_operator_matches_ar1_draws(steps):
    a, n = 0.8, 200_000
    f = parse_distribution("rademacher")
    start = parse_distribution("exponential")
    cfg = SimConfig(a=a, n_samples=n, method="ar1_iteration", steps=steps, seed=13)

    emp = empirical_cf(ar1_iterate(f, start, a, steps, cfg))
    composed = ta_power(from_distribution(f), from_distribution(start), a, steps)

    xi = np.linspace(-8.0, 8.0, 161)
    assert np.max(np.abs(emp(xi) - composed(xi))) <= 6.0 / math.sqrt(n)
