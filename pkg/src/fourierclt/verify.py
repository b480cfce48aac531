"""Desk-scale invariant checks behind ``fourierclt verify``."""

from __future__ import annotations

import itertools
import math
from typing import Callable

import numpy as np
from scipy import special

from fourierclt.bounds import (
    envelope,
    envelope_sup,
    kolmogorov_from_d2,
    lemma1iii_bound,
    lemma2_search,
    theorem3_bound,
)
from fourierclt.charfn import (
    discounted_product_cf,
    empirical_cf,
    from_distribution,
    gaussian_cf,
    ta_power,
)
from fourierclt.discounted import (
    SimConfig,
    contraction_ratio,
    fixed_point_residual,
    simulate_discounted,
)
from fourierclt.distributions import (
    abs_moment,
    catalog_names,
    parse_distribution,
    symmetric_cf_by_quadrature,
)
from fourierclt.errors import FourierCltError
from fourierclt.grid import standard_grid
from fourierclt.metrics import dkw_radius, fourier_distance, kolmogorov_distance, refine_sup
from fourierclt.ui import check_item, header, subheader, summary

CheckResult = tuple[bool, str]

_CONTRACTION_LAWS = ("normal", "rademacher", "uniform", "exponential")


def _check_catalog() -> CheckResult:
    xi = standard_grid().mirrored()
    for name in catalog_names():
        dist = parse_distribution(name)
        vals = dist.cf(xi)
        if abs(complex(dist.cf(np.array([0.0]))[0]) - 1.0) > 1e-12:
            return False, f"{name}: C(0) != 1"
        if np.max(np.abs(vals)) > 1.0 + 1e-12:
            return False, f"{name}: |C| exceeds 1"
        if np.max(np.abs(dist.cf(-xi) - np.conj(vals))) > 1e-12:
            return False, f"{name}: C(-xi) is not conj(C(xi))"
        if abs(abs_moment(dist, 2.0) - 1.0) > 1e-6:
            return False, f"{name}: E|X|^2 = {abs_moment(dist, 2.0):.8g}"
    return True, f"{len(catalog_names())} laws standardized with Hermitian cfs"


def _check_student_cf() -> CheckResult:
    worst = 0.0
    for name in ("student_t:2.5", "student_t:4"):
        dist = parse_distribution(name)
        assert dist.pdf is not None
        for x in (0.1, 0.5, 1.0, 2.0, 5.0):
            ref = symmetric_cf_by_quadrature(dist.pdf, x)
            worst = max(worst, abs(float(dist.cf(np.array([x]))[0].real) - ref))
    return worst <= 1e-6, f"Bessel form vs quadrature, max gap {worst:.2e}"


def _check_gaussian_null() -> CheckResult:
    phi = gaussian_cf()
    f = from_distribution(parse_distribution("normal"))
    worst = max(
        fourier_distance(discounted_product_cf(f, a, 1e-12), phi, 2.0).value
        for a in (0.5, 0.9, 0.99)
    )
    return worst <= 1e-8, f"d_2(Phi_a, Phi) <= {worst:.2e}"


def _check_contraction() -> CheckResult:
    f = from_distribution(parse_distribution("rademacher"))
    cfs = {n: from_distribution(parse_distribution(n)) for n in _CONTRACTION_LAWS}
    worst = 0.0
    for (gn, hn), a in itertools.product(
        itertools.combinations(_CONTRACTION_LAWS, 2), (0.3, 0.6, 0.9)
    ):
        before, after = contraction_ratio(cfs[gn], cfs[hn], f, a)
        limit = a * a * (before.value + before.error_estimate) + after.error_estimate
        if after.value > limit:
            return False, f"{gn} vs {hn} at a={a}: {after.value:.3e} > {limit:.3e}"
        worst = max(worst, after.value / (a * a * before.value))
    return True, f"d_2(T_a G, T_a H) / (a^2 d_2(G, H)) <= {worst:.4f}"


def _check_fixed_point() -> CheckResult:
    worst = 0.0
    for name, a in itertools.product(("rademacher", "exponential"), (0.5, 0.9)):
        f = from_distribution(parse_distribution(name))
        fa = discounted_product_cf(f, a, 1e-12)
        worst = max(worst, fixed_point_residual(fa, f, a))
    return worst <= 5e-9, f"d_2(F_a, T_a F_a) <= {worst:.2e}"


def _check_uniqueness() -> CheckResult:
    a, n = 0.5, 10
    f = from_distribution(parse_distribution("rademacher"))
    g = from_distribution(parse_distribution("exponential"))
    fa = discounted_product_cf(f, a, 1e-12)
    start = fourier_distance(g, fa, 2.0).value
    end = fourier_distance(ta_power(f, g, a, n), fa, 2.0).value
    ok = end <= a ** (2 * n) * start + 1e-9
    return ok, f"d_2(T_a^{n} G, F_a) = {end:.2e} from {start:.2e}"


def _check_lemma_identity() -> CheckResult:
    phi = gaussian_cf()
    worst = 0.0
    for name, a in itertools.product(("rademacher", "uniform", "exponential"), (0.5, 0.9)):
        f = from_distribution(parse_distribution(name))
        direct = lemma2_search(f, a).value
        via_gaussian = lemma1iii_bound(phi, f, a)
        worst = max(worst, abs(direct - via_gaussian) / direct)
    return worst <= 1e-6, f"weighted sup vs d_2(Phi, T_a Phi)/(1-a^2), rel gap {worst:.1e}"


def _check_envelope() -> CheckResult:
    rng = np.random.default_rng(7)
    worst = 0.0
    for a, s in zip(rng.uniform(0.05, 0.999, 20), rng.uniform(2.05, 3.0, 20)):
        w_star, value = envelope_sup(float(a), float(s))
        _, found = refine_sup(
            lambda w: float(envelope(float(a), np.asarray(w))) * w ** (s - 2.0),
            (w_star / 100.0, 10.0 * w_star),
        )
        worst = max(worst, abs(found - value) / value)
    return worst <= 1e-6, f"closed-form sup vs numeric, rel gap {worst:.1e}"


def _check_theorem_chain() -> CheckResult:
    s = 3.0
    f = from_distribution(parse_distribution("rademacher"))
    phi = gaussian_cf()
    ds = fourier_distance(f, phi, s)
    for a in (0.9, 0.99):
        d2 = fourier_distance(discounted_product_cf(f, a, 1e-8), phi, 2.0)
        l2 = lemma2_search(f, a)
        t3 = theorem3_bound(a, s, ds.value)
        eps = d2.error_estimate + l2.error_estimate + envelope_sup(a, s)[1] * ds.error_estimate
        if not (d2.value <= l2.value + eps and l2.value <= t3 + eps):
            return False, f"a={a}: {d2.value:.3e} / {l2.value:.3e} / {t3:.3e} out of order"
    return True, "d_2(F_a, Phi) <= weighted sup <= rate bound"


def _check_two_oracles() -> CheckResult:
    a, n = 0.9, 100_000
    dist = parse_distribution("rademacher")
    samples = simulate_discounted(dist, SimConfig(a=a, n_samples=n, seed=11))
    fa = discounted_product_cf(from_distribution(dist), a, 1e-8)
    xi = np.geomspace(0.1, 5.0, 50)
    gap = float(np.max(np.abs(empirical_cf(samples)(xi) - fa(xi))))
    if gap > 5.0 / math.sqrt(n):
        return False, f"Monte Carlo and product cf differ by {gap:.3e}"

    km = kolmogorov_distance(samples, special.ndtr)
    d2 = fourier_distance(fa, gaussian_cf(), 2.0).value
    limit = kolmogorov_from_d2(d2) + dkw_radius(n)
    if km > limit:
        return False, f"Kolmogorov distance {km:.3e} exceeds {limit:.3e}"
    return True, f"cf gap {gap:.1e}, Kolmogorov {km:.1e} <= {limit:.1e}"


CHECKS: list[tuple[str, Callable[[], CheckResult]]] = [
    ("Catalog", _check_catalog),
    ("Student-t cf", _check_student_cf),
    ("Gaussian null", _check_gaussian_null),
    ("Contraction", _check_contraction),
    ("Fixed point", _check_fixed_point),
    ("Uniqueness", _check_uniqueness),
    ("Lemma identity", _check_lemma_identity),
    ("Envelope", _check_envelope),
    ("Bound chain", _check_theorem_chain),
    ("Two oracles", _check_two_oracles),
]


def run_verification(checks: list[tuple[str, Callable[[], CheckResult]]] | None = None) -> int:
    header("fourierclt verify")

    issues: list[str] = []
    for name, check in checks or CHECKS:
        try:
            ok, detail = check()
        except FourierCltError as e:
            ok, detail = False, str(e)
        check_item(ok, f"{name}: {detail}")
        if not ok:
            issues.append(f"{name}: {detail}")

    summary(len(issues))
    if issues:
        subheader("Failures")
        for issue in issues:
            check_item(False, issue)
    print()
    return 1 if issues else 0
