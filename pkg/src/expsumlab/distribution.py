"""Value-distribution experiments: vertical semicircle law for cubic sums,
horizontal scans at fixed integer bases, and exponent-size statistics.

Random sampling uses an explicit splitmix64 generator so every CSV is
bit-reproducible from (config, seed).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .ffcore import (PrimeContext, minimal_exponent_representation,
                     pow_range, primes_up_to)

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64; deterministic 64-bit stream from a seed."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n), unbiased by rejection."""
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            v = self.next_u64()
            if v < limit:
                return v % n


def semicircle_cdf(x: float) -> float:
    """CDF of the density (1/2pi) sqrt(4 - t^2) on [-2, 2]."""
    if x <= -2:
        return 0.0
    if x >= 2:
        return 1.0
    return 0.5 + x * math.sqrt(4 - x * x) / (4 * math.pi) + math.asin(x / 2) / math.pi


def gaussian_cdf(x: float, sigma: float) -> float:
    return 0.5 * (1 + math.erf(x / (sigma * math.sqrt(2))))


def ks_distance(samples: np.ndarray, cdf) -> float:
    """Kolmogorov-Smirnov distance between the empirical CDF and `cdf`."""
    xs = np.sort(np.asarray(samples, dtype=float))
    n = xs.size
    if n == 0:
        raise ValueError("empty sample")
    F = np.array([cdf(x) for x in xs])
    i = np.arange(1, n + 1)
    d_plus = np.max(i / n - F)
    d_minus = np.max(F - (i - 1) / n)
    return float(max(d_plus, d_minus, 0.0))


def cubic_sum(ctx: PrimeContext, a1: int, a2: int) -> float:
    """T_3(a; p) = sum over all x in F_p of e_p(a1 x + a2 x^3); real-valued
    because x -> -x conjugates the sum."""
    p = ctx.p
    if a2 % p == 0:
        raise ValueError("a2 must be nonzero")
    x = np.arange(p, dtype=np.int64)
    x3 = np.mod(np.mod(x * x, p) * x, p)
    val = complex(np.sum(ctx.unit_roots[np.mod((a1 % p) * x + (a2 % p) * x3, p)]))
    if abs(val.imag) >= 1e-8 * p:
        raise AssertionError(f"cubic sum not real: {val}")
    return val.real


SEMICIRCLE = "SEMICIRCLE"
GAUSSIAN_UNIT = "GAUSSIAN_UNIT"


@dataclass(frozen=True)
class EmpiricalDistribution:
    samples: np.ndarray
    coeff_a1: np.ndarray
    coeff_a2: np.ndarray
    bin_edges: np.ndarray
    bin_counts: np.ndarray
    ks_distance: float
    reference: str


def semicircle_experiment(ctx: PrimeContext, n_samples: int = 10_000,
                          seed: int = 0, mode: str = "RANDOM",
                          bins: int = 40) -> EmpiricalDistribution:
    """Samples T_3(a; p)/sqrt(p) over coefficient pairs (a1 in F_p,
    a2 in F_p^*) and measures the KS distance to the semicircle CDF.

    RANDOM draws n_samples seeded pairs; EXHAUSTIVE (p <= 151) enumerates
    all p(p-1) pairs.  Every sample must obey |T_3|/sqrt(p) <= 3 (Weil).
    """
    p = ctx.p
    if mode == "RANDOM":
        if n_samples < 100:
            raise ValueError("need at least 100 samples")
        rng = SplitMix64(seed)
        a1 = np.array([rng.below(p) for _ in range(n_samples)], dtype=np.int64)
        a2 = np.array([1 + rng.below(p - 1) for _ in range(n_samples)], dtype=np.int64)
    elif mode == "EXHAUSTIVE":
        if p > 151:
            raise ValueError("EXHAUSTIVE mode capped at p <= 151")
        grid1, grid2 = np.meshgrid(np.arange(p), np.arange(1, p), indexing="ij")
        a1, a2 = grid1.ravel().astype(np.int64), grid2.ravel().astype(np.int64)
    else:
        raise ValueError(f"unknown mode {mode!r}")

    x = np.arange(p, dtype=np.int64)
    x3 = np.mod(np.mod(x * x, p) * x, p)
    values = np.empty(a1.size)
    chunk = max(1, (1 << 22) // p)
    for lo in range(0, a1.size, chunk):
        hi = min(lo + chunk, a1.size)
        idx = np.mod(a1[lo:hi, None] * x[None, :] + a2[lo:hi, None] * x3[None, :], p)
        vals = np.sum(ctx.unit_roots[idx], axis=1)
        if np.max(np.abs(vals.imag)) >= 1e-8 * p:
            raise AssertionError("cubic sum with nonzero imaginary part")
        values[lo:hi] = vals.real
    samples = values / math.sqrt(p)
    if np.max(np.abs(samples)) > 3 + 1e-9:
        raise AssertionError("sample beyond the Weil cap 3")
    counts, edges = np.histogram(samples, bins=bins, range=(-2.0, 2.0))
    ks = ks_distance(samples, semicircle_cdf)
    return EmpiricalDistribution(samples=samples, coeff_a1=a1, coeff_a2=a2,
                                 bin_edges=edges, bin_counts=counts,
                                 ks_distance=ks, reference=SEMICIRCLE)


@dataclass(frozen=True)
class HorizontalRow:
    p: int
    re: float
    im: float
    abs: float


def _horizontal_one(p: int, h, a) -> HorizontalRow | None:
    hm = [x % p for x in h]
    if any(x in (0, 1, p - 1) for x in hm):
        return None
    idx = np.zeros(p - 1, dtype=np.int64)
    for ai, hi in zip(a, hm):
        ai %= p
        if ai:
            np.mod(idx + ai * pow_range(hi, p - 1, p), p, out=idx)
    val = complex(np.sum(np.exp(2j * np.pi * idx / p)))
    mag = abs(val)
    if mag > p - 1 + 1e-6:
        raise AssertionError(f"|S| = {mag} beats the trivial bound at p={p}")
    sq = math.sqrt(p)
    return HorizontalRow(p=p, re=val.real / sq, im=val.imag / sq, abs=mag / sq)


def horizontal_scan(h, a, p_min: int, p_max: int, par_map=map):
    """S(a mod p, h mod p; p)/sqrt(p) for every prime p in [p_min, p_max].

    Primes where some base reduces to 0 or +/-1 are skipped (and reported).
    Purely observational.  `par_map` may be an executor map; rows come back
    in ascending p regardless.
    """
    if p_max > 10**6:
        raise ValueError("desk cap is p_max <= 10^6")
    primes = [p for p in primes_up_to(p_max) if p >= max(3, p_min)]
    results = list(par_map(lambda p: _horizontal_one(p, h, a), primes))
    rows = [row for row in results if row is not None]
    skipped = [p for p, row in zip(primes, results) if row is None]
    return rows, skipped, _horizontal_summary(rows)


def _horizontal_summary(rows) -> dict:
    if not rows:
        return {"n": 0}
    re = np.array([r.re for r in rows])
    im = np.array([r.im for r in rows])
    var_re = float(np.var(re))
    sigma = math.sqrt(var_re) if var_re > 0 else 1.0
    centered = re - re.mean()
    return {
        "n": len(rows),
        "mean_re": float(re.mean()),
        "mean_im": float(im.mean()),
        "var_re": var_re,
        "var_im": float(np.var(im)),
        "mean_abs_sq": float(np.mean(re**2 + im**2)),
        "ks_re_vs_fitted_gaussian": ks_distance(
            centered, lambda x: gaussian_cdf(x, sigma)),
    }


@dataclass(frozen=True)
class ExponentRow:
    p: int
    r1: int
    r2: int
    alpha: float


def exponent_growth_scan(h1: int, h2: int, p_max: int, p_min: int = 3):
    """Minimal exponent representation of (h1, h2) for every prime up to
    p_max, reporting alpha_p = ln(max r_i)/ln p; degenerate reductions are
    skipped.  Returns (rows, skipped, summary with median and deciles).
    """
    dependent = any(h1**i == h2**j
                    for i in range(1, 11) for j in range(1, 11))
    rows: list[ExponentRow] = []
    skipped: list[int] = []
    for p in primes_up_to(p_max):
        if p < max(3, p_min):
            continue
        if any(x % p in (0, 1, p - 1) for x in (h1, h2)):
            skipped.append(p)
            continue
        ctx = PrimeContext.create(p)
        rep = minimal_exponent_representation(ctx, (h1, h2))
        rows.append(ExponentRow(p=p, r1=rep.r[0], r2=rep.r[1], alpha=rep.alpha))
    alphas = np.array([r.alpha for r in rows])
    summary = {
        "n": len(rows),
        "median_alpha": float(np.median(alphas)) if rows else float("nan"),
        "deciles": [float(np.quantile(alphas, q / 10)) for q in range(11)] if len(rows) else [],
        # rank-one pairs are allowed as contrast runs, but flagged
        "dependent_bases_warning": dependent,
    }
    return rows, skipped, summary
