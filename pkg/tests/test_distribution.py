import math

import numpy as np
import pytest
import scipy.stats

from expsumlab import (PrimeContext, SplitMix64, cubic_sum,
                       exponent_growth_scan, gaussian_cdf, horizontal_scan,
                       ks_distance, semicircle_cdf, semicircle_experiment)


def test_splitmix64_known_vector():
    # reference outputs of splitmix64 seeded with 0
    rng = SplitMix64(0)
    assert rng.next_u64() == 0xE220A8397B1DCDAF
    assert rng.next_u64() == 0x6E789E6AA1B965F4
    assert rng.next_u64() == 0x06C45D188009454F


def test_splitmix64_below_deterministic_and_in_range():
    r1, r2 = SplitMix64(99), SplitMix64(99)
    a = [r1.below(17) for _ in range(200)]
    b = [r2.below(17) for _ in range(200)]
    assert a == b
    assert all(0 <= v < 17 for v in a)
    assert len(set(a)) == 17  # every residue hit in 200 draws


def test_semicircle_cdf_properties():
    assert semicircle_cdf(-2.5) == 0.0
    assert semicircle_cdf(2.5) == 1.0
    assert abs(semicircle_cdf(0.0) - 0.5) < 1e-15
    xs = np.linspace(-2, 2, 101)
    vals = [semicircle_cdf(x) for x in xs]
    assert all(a <= b + 1e-15 for a, b in zip(vals, vals[1:]))
    # derivative matches the density (1/2pi) sqrt(4 - x^2)
    for x in (-1.5, -0.3, 0.7, 1.9):
        num = (semicircle_cdf(x + 1e-6) - semicircle_cdf(x - 1e-6)) / 2e-6
        assert abs(num - math.sqrt(4 - x * x) / (2 * math.pi)) < 1e-6


def test_gaussian_cdf_vs_scipy():
    for x in (-2.0, -0.5, 0.0, 1.3):
        for s in (0.5, 1.0, 2.0):
            assert abs(gaussian_cdf(x, s) - scipy.stats.norm.cdf(x, scale=s)) < 1e-12


def test_ks_distance_vs_scipy():
    rng = np.random.default_rng(5)
    xs = rng.normal(size=500)
    ours = ks_distance(xs, lambda x: scipy.stats.norm.cdf(x))
    ref = scipy.stats.kstest(xs, "norm").statistic
    assert abs(ours - ref) < 1e-12
    with pytest.raises(ValueError):
        ks_distance(np.array([]), scipy.stats.norm.cdf)


def test_cubic_sum_real_and_matches_naive():
    import cmath
    p = 31
    ctx = PrimeContext.create(p)
    for (a1, a2) in ((0, 1), (3, 7), (30, 30)):
        want = sum(cmath.exp(2j * math.pi * ((a1 * x + a2 * x**3) % p) / p)
                   for x in range(p))
        assert abs(cubic_sum(ctx, a1, a2) - want.real) < 1e-9
        assert abs(want.imag) < 1e-9
    with pytest.raises(ValueError):
        cubic_sum(ctx, 1, 31)


def test_semicircle_experiment_random():
    ctx = PrimeContext.create(1009)
    d1 = semicircle_experiment(ctx, n_samples=2000, seed=4)
    d2 = semicircle_experiment(ctx, n_samples=2000, seed=4)
    assert np.array_equal(d1.samples, d2.samples)  # bit-reproducible
    assert d1.reference == "SEMICIRCLE"
    assert np.max(np.abs(d1.samples)) <= 3
    assert d1.ks_distance < 0.10
    assert int(np.sum(d1.bin_counts)) <= 2000
    with pytest.raises(ValueError):
        semicircle_experiment(ctx, n_samples=10)
    with pytest.raises(ValueError):
        semicircle_experiment(ctx, mode="WAT")


def test_semicircle_experiment_exhaustive():
    ctx = PrimeContext.create(61)
    d = semicircle_experiment(ctx, mode="EXHAUSTIVE")
    assert d.samples.size == 61 * 60
    with pytest.raises(ValueError):
        semicircle_experiment(PrimeContext.create(157), mode="EXHAUSTIVE")


def test_horizontal_scan_small():
    rows, skipped, summary = horizontal_scan((2, 5), (1, 1), 3, 200)
    assert skipped == [3, 5]  # bases reduce to 0 or +/-1 there
    assert [r.p for r in rows] == sorted(r.p for r in rows)
    assert summary["n"] == len(rows)
    for r in rows:
        assert r.abs <= (r.p - 1) / math.sqrt(r.p) + 1e-9
        assert abs(r.abs - math.hypot(r.re, r.im)) < 1e-12
    with pytest.raises(ValueError):
        horizontal_scan((2, 5), (1, 1), 3, 10**7)


def test_horizontal_scan_parallel_matches_serial():
    from concurrent.futures import ThreadPoolExecutor
    serial = horizontal_scan((2, 5), (1, 1), 3, 500)
    with ThreadPoolExecutor(max_workers=4) as ex:
        parallel = horizontal_scan((2, 5), (1, 1), 3, 500, par_map=ex.map)
    assert serial[0] == parallel[0]
    assert serial[1] == parallel[1]


def test_exponent_growth_scan():
    rows, skipped, summary = exponent_growth_scan(2, 3, 300)
    assert summary["n"] == len(rows)
    assert not summary["dependent_bases_warning"]
    assert 0.0 < summary["median_alpha"] < 1.0
    for r in rows:
        assert max(r.r1, r.r2) >= 1
        assert abs(r.alpha - math.log(max(r.r1, r.r2)) / math.log(r.p)) < 1e-12
    # rank-one contrast pair is allowed but flagged
    _, _, s2 = exponent_growth_scan(2, 8, 100)
    assert s2["dependent_bases_warning"]
