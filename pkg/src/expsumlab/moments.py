"""Moment identities for the trinomial sums T(a, (r, s, 1); p).

The cubic moment, averaged over all coefficient triples, equals the exact
count Q_p(r, s) = (p-1) N_p(r, s); the first moment vanishes and the second
equals p-1.  Everything here is evaluated two ways: a direct floating sum
over all coefficients and an exact integer count.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .checks import BoundCheck, hard_check
from .ffcore import PrimeContext, pow_mod_array
from .intpoly import _common_zeros, count_common_zeros

DIRECT_P_CAP = 127  # the direct moment costs O(p^4)


def _trinomial_table(ctx: PrimeContext, r: int, s: int) -> np.ndarray:
    """T[a1, a2, a3] = sum over x in F_p^* of e_p(a1 x^r + a2 x^s + a3 x),
    for all coefficient triples at once."""
    p = ctx.p
    if p > DIRECT_P_CAP:
        raise ValueError(f"p={p} exceeds the direct-moment cap {DIRECT_P_CAP}")
    x = np.arange(1, p, dtype=np.int64)
    coeff = np.arange(p, dtype=np.int64)

    def phases(exps: np.ndarray) -> np.ndarray:
        return ctx.unit_roots[np.mod(np.outer(exps, coeff), p)]

    A = phases(pow_mod_array(x, r, p))
    B = phases(pow_mod_array(x, s, p))
    C = phases(x)
    return np.einsum("xa,xb,xc->abc", A, B, C, optimize=True)


def direct_cubic_moment(ctx: PrimeContext, r: int, s: int) -> complex:
    """(1/p^3) * sum over a in F_p^3 of conj(T) * T^2."""
    if not r > s > 1:
        raise ValueError("need r > s > 1")
    T = _trinomial_table(ctx, r, s)
    return complex(np.sum(np.conj(T) * T * T) / ctx.p**3)


def count_Q(p: int, r: int, s: int) -> int:
    """Number of (x, y, z) in (F_p^*)^3 with x^r = y^r + z^r, x^s = y^s + z^s
    and x = y + z.

    Returned as (p-1) * N_p(r, s); for p <= 503 a direct brute-force count
    over (y, z) pairs is run as well and any disagreement is fatal.
    """
    interior, _ = _common_zeros(p, r, s)
    q = (p - 1) * len(interior)
    if p <= 503:
        yz = np.arange(1, p, dtype=np.int64)
        pr = np.concatenate(([0], pow_mod_array(yz, r, p)))
        ps = np.concatenate(([0], pow_mod_array(yz, s, p)))
        y = yz[:, None]
        z = yz[None, :]
        x = np.mod(y + z, p)
        good = ((x != 0)
                & (pr[x] == np.mod(pr[y] + pr[z], p))
                & (ps[x] == np.mod(ps[y] + ps[z], p)))
        brute = int(np.count_nonzero(good))
        if brute != q:
            raise AssertionError(
                f"Q_{p}({r},{s}): scaled count {q} != brute force {brute}")
    return q


def low_moments(ctx: PrimeContext, r: int, s: int) -> tuple[complex, float]:
    """First and second moments of T over all coefficient triples.

    The first must vanish and the second must equal p-1; violations beyond
    float tolerance are fatal.
    """
    p = ctx.p
    T = _trinomial_table(ctx, r, s)
    first = complex(np.sum(T) / p**3)
    second = float(np.sum(np.abs(T) ** 2).real / p**3)
    if abs(first) >= 1e-6 * p:
        raise AssertionError(f"first moment {first} not ~0 at p={p}")
    if abs(second - (p - 1)) >= 1e-6 * p:
        raise AssertionError(f"second moment {second} != p-1 at p={p}")
    return first, second


def holder_check(ctx: PrimeContext, r: int, s: int) -> BoundCheck:
    """HARD lower bound: the third absolute moment is at least (p-1)^{3/2}
    (minus a float slack of 1e-5 p^{3/2})."""
    p = ctx.p
    T = _trinomial_table(ctx, r, s)
    third_abs = float(np.sum(np.abs(T) ** 3) / p**3)
    bound = (p - 1) ** 1.5 - 1e-5 * p**1.5
    return hard_check(f"holder(p={p},r={r},s={s})", third_abs, bound,
                      lower_bound=True)


@dataclass(frozen=True)
class MomentReport:
    p: int
    r: int
    s: int
    M_float: complex
    Q_exact: int
    N: int
    second_moment_float: float
    third_abs_moment: float
    identities_ok: bool

    def to_json(self) -> str:
        return json.dumps({
            "p": self.p, "r": self.r, "s": self.s,
            "M_re": self.M_float.real, "M_im": self.M_float.imag,
            "Q_exact": str(self.Q_exact), "N": self.N,
            "second_moment": self.second_moment_float,
            "third_abs_moment": self.third_abs_moment,
            "identities_ok": self.identities_ok,
        }, sort_keys=True)


def moment_report(ctx: PrimeContext, r: int, s: int) -> MomentReport:
    """Full desk report: direct moments vs the exact count, one table pass."""
    p = ctx.p
    T = _trinomial_table(ctx, r, s)
    absT = np.abs(T)
    M = complex(np.sum(np.conj(T) * T * T) / p**3)
    first = complex(np.sum(T) / p**3)
    second = float(np.sum(absT**2) / p**3)
    third = float(np.sum(absT**3) / p**3)
    cert = count_common_zeros(p, r, s)
    Q = (p - 1) * cert.N
    ok = (abs(M - Q) <= 1e-5 * p
          and abs(first) < 1e-6 * p
          and abs(second - (p - 1)) < 1e-6 * p
          and Q % (p - 1) == 0)
    return MomentReport(p=p, r=r, s=s, M_float=M, Q_exact=Q, N=cert.N,
                        second_moment_float=second, third_abs_moment=third,
                        identities_ok=ok)
