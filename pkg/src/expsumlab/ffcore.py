"""Exact arithmetic in F_p and Z_{p-1}.

Primality testing, primitive roots, modular powers, baby-step giant-step
discrete logarithms, and precomputed tables of p-th roots of unity that the
sum evaluators index into.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

# Deterministic Miller-Rabin witness set, complete for n < 3.3 * 10^24
# (covers the whole 64-bit range).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

DEFAULT_TABLE_CAP = 1 << 25


def is_prime(n: int) -> bool:
    """Deterministic primality test for 2 <= n < 2**63."""
    if not 2 <= n < 2**63:
        raise ValueError(f"n out of supported range [2, 2^63): {n}")
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(n: int) -> list[int]:
    """All primes <= n by sieve of Eratosthenes."""
    if n < 2:
        return []
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for q in range(2, math.isqrt(n) + 1):
        if sieve[q]:
            sieve[q * q :: q] = False
    return np.flatnonzero(sieve).tolist()


def mod_pow(b: int, e: int, p: int) -> int:
    """b^e mod p with the convention 0^0 = 1."""
    if not 0 <= b < p:
        raise ValueError(f"base {b} not a residue mod {p}")
    if e < 0:
        raise ValueError("negative exponent")
    return pow(b, e, p)


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def find_primitive_root(p: int) -> int:
    """Smallest primitive root of F_p^* (deterministic across runs)."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    factors = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise AssertionError("unreachable: every prime has a primitive root")


@dataclass(frozen=True)
class PrimeContext:
    """A prime p, its smallest primitive root g, and the table of p-th roots
    of unity (unit_roots[z] = exp(2*pi*i*z/p)).

    Immutable after construction; safe to share across parallel workers.
    """

    p: int
    g: int
    unit_roots: np.ndarray = field(repr=False, compare=False)

    @classmethod
    def create(cls, p: int, table_cap: int = DEFAULT_TABLE_CAP) -> "PrimeContext":
        if p < 3 or not is_prime(p):
            raise ValueError(f"p must be an odd prime, got {p}")
        if p > table_cap:
            raise ValueError(
                f"p={p} exceeds the unit-root table cap {table_cap}; "
                "raise table_cap explicitly to accept the O(p) memory"
            )
        g = find_primitive_root(p)
        roots = np.exp(2j * np.pi * np.arange(p) / p)
        roots[0] = 1.0  # exact by definition
        roots.setflags(write=False)
        return cls(p=p, g=g, unit_roots=roots)

    def phase(self, z: int) -> complex:
        """e_p(z) for any integer z."""
        return complex(self.unit_roots[z % self.p])


def discrete_log(ctx: PrimeContext, h: int) -> int:
    """r in [0, p-2] with g^r = h mod p, by baby-step giant-step."""
    p, g = ctx.p, ctx.g
    h %= p
    if h == 0:
        raise ValueError("discrete log of 0 is undefined")
    m = math.isqrt(p - 2) + 1
    baby = {}
    cur = 1
    for j in range(m):
        baby.setdefault(cur, j)
        cur = cur * g % p
    gm_inv = pow(g, (-m) % (p - 1), p)  # giant-step factor g^{-m}
    y = h
    for i in range(m + 1):
        j = baby.get(y)
        if j is not None:
            return (i * m + j) % (p - 1)
        y = y * gm_inv % p
    raise AssertionError(f"BSGS failed for h={h} mod {p}")


def pow_range(h: int, n: int, p: int) -> np.ndarray:
    """Array [h^1, h^2, ..., h^n] mod p, by index doubling (log n numpy passes).

    Requires p < 2^31 so products fit in int64.
    """
    if n <= 0:
        return np.empty(0, dtype=np.int64)
    out = np.empty(n, dtype=np.int64)
    out[0] = h % p
    m = 1
    while m < n:
        k = min(m, n - m)
        np.mod(out[:k] * out[m - 1], p, out=out[m : m + k])
        m += k
    return out


def pow_mod_array(x: np.ndarray, e: int, p: int) -> np.ndarray:
    """Elementwise x^e mod p by square-and-multiply (e >= 0, convention 0^0=1)."""
    if e < 0:
        raise ValueError("negative exponent")
    base = np.mod(x, p).astype(np.int64)
    result = np.ones_like(base)
    while e:
        if e & 1:
            np.mod(result * base, p, out=result)
        np.mod(base * base, p, out=base)
        e >>= 1
    return result


@dataclass(frozen=True)
class ExponentRepresentation:
    """Scaled discrete-log vector minimizing the largest exponent."""

    r: tuple[int, ...]
    lam: int  # unit of Z_{p-1} realizing the minimum (smallest on ties)
    alpha: float  # log(max r_i) / log p


def minimal_exponent_representation(
    ctx: PrimeContext, h: tuple[int, ...] | list[int]
) -> ExponentRepresentation:
    """Discrete logs of the bases, rescaled by the unit lambda of Z_{p-1}
    that minimizes max_i (lambda * r_i mod (p-1)); ties go to the smallest
    lambda.  Each base must avoid {0, 1, p-1}.
    """
    p = ctx.p
    if len(h) == 0:
        raise ValueError("need at least one base")
    hr = [x % p for x in h]
    for x in hr:
        if x in (0, 1, p - 1):
            raise ValueError(f"base {x} mod {p} in the excluded set {{0, +/-1}}")
    logs = np.array([discrete_log(ctx, x) for x in hr], dtype=np.int64)
    n = p - 1
    lam = np.arange(1, n, dtype=np.int64)
    lam = lam[np.gcd(lam, n) == 1]
    scaled = np.mod(lam[:, None] * logs[None, :], n)
    maxima = scaled.max(axis=1)
    best = int(np.argmin(maxima))  # argmin returns the first, i.e. smallest lambda
    r = tuple(int(v) for v in scaled[best])
    alpha = math.log(max(r)) / math.log(p)
    return ExponentRepresentation(r=r, lam=int(lam[best]), alpha=alpha)
