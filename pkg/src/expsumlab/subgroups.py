"""Brute-force counters for congruence systems and interval/subgroup
intersections, with the explicit-constant bound checks attached.

Everything here is exact integer counting; the exponential-sum side of the
same lemmas lives in expsums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .checks import (DEFAULT_RATIO_CEILING, BoundCheck, hard_check,
                     monitored_check)
from .ffcore import pow_mod_array


@dataclass(frozen=True)
class CongruenceCount:
    """Solution count of the two-power congruence system over an interval."""

    p: int
    H: int
    K: int
    V_set: tuple[int, ...]
    v_max: int
    N: int


def count_congruence_system(p: int, V_set, H: int, K: int) -> CongruenceCount:
    """N = #{(x, v1, v2): 0 <= x <= p-1, v1 != v2 in V_set,
    x^{v1} mod p and x^{v2} mod p both in [K+1, K+H]}."""
    vs = sorted(int(v) for v in V_set)
    if len(set(vs)) != len(vs):
        raise ValueError("V_set must not contain duplicates")
    if any(not 1 <= v <= p - 1 for v in vs):
        raise ValueError("V_set must consist of distinct integers in [1, p-1]")
    if not (0 <= K < K + H <= p - 1):
        raise ValueError("invalid interval")
    x = np.arange(p, dtype=np.int64)
    # hits[v-index, x] = 1 iff x^v lands in the interval
    counts = np.zeros(p, dtype=np.int64)
    for v in vs:
        vals = pow_mod_array(x, v, p)
        counts += (vals >= K + 1) & (vals <= K + H)
    N = int(np.sum(counts * (counts - 1)))  # ordered pairs of distinct v's
    return CongruenceCount(p=p, H=H, K=K, V_set=tuple(vs), v_max=vs[-1], N=N)


def congruence_bound_check(p: int, V_set, H: int, K: int) -> BoundCheck:
    """HARD, strict: N < H^2 V^2 / p + V^2 p^{1/2} (ln p)^2 v_max."""
    cc = count_congruence_system(p, V_set, H, K)
    V = len(cc.V_set)
    bound = H * H * V * V / p + V * V * math.sqrt(p) * math.log(p) ** 2 * cc.v_max
    chk = hard_check(f"congruence_bound(p={p},V={V},H={H},K={K})", cc.N, bound)
    chk.passed = cc.N < bound  # the lemma is a strict inequality
    return chk


@dataclass(frozen=True)
class VSet:
    """First V positive integers coprime to (p-1)/d, plus the v_max monitor."""

    values: tuple[int, ...]
    v_max: int
    vmax_check: BoundCheck


def build_V_set(p: int, d: int, V: int, ceiling: float = DEFAULT_RATIO_CEILING) -> VSet:
    """The first V positive integers relatively prime to (p-1)/d.

    v_max is monitored against C * V * ln ln p (the sieve heuristic says
    v_max stays within a subpolynomial factor of V).
    """
    if d <= 0 or (p - 1) % d != 0:
        raise ValueError(f"d={d} must divide p-1={p - 1}")
    m = (p - 1) // d
    if V < 1:
        raise ValueError("V must be >= 1")
    values = []
    k = 0
    while len(values) < V:
        k += 1
        if math.gcd(k, m) == 1:
            values.append(k)
    v_max = values[-1]
    bound = V * math.log(max(math.log(p), math.e))
    chk = monitored_check(f"vmax(p={p},d={d},V={V})", v_max, bound, ceiling)
    return VSet(values=tuple(values), v_max=v_max, vmax_check=chk)


def count_power_residues_in_interval(p: int, d: int, H: int) -> int:
    """I = #{h in [1, H] : h is a d-th power residue mod p}, via the Euler
    criterion h^{(p-1)/d} = 1 mod p."""
    if d <= 0 or (p - 1) % d != 0:
        raise ValueError(f"d={d} must divide p-1={p - 1}")
    if not 1 <= H < p:
        raise ValueError("H must satisfy 1 <= H < p")
    h = np.arange(1, H + 1, dtype=np.int64)
    return int(np.count_nonzero(pow_mod_array(h, (p - 1) // d, p) == 1))


def power_residue_monitors(p: int, d: int, H: int,
                           ceiling: float = DEFAULT_RATIO_CEILING) -> list[BoundCheck]:
    """MONITORED: I against (H + p^{1/n}) / d^{1/n} for n in {1, 2, 3}."""
    I = count_power_residues_in_interval(p, d, H)
    return [
        monitored_check(f"interval_residues(p={p},d={d},H={H},n={n})",
                        I, (H + p ** (1 / n)) / d ** (1 / n), ceiling)
        for n in (1, 2, 3)
    ]


def count_ratio_power_residues(p: int, e: int, H: int) -> int:
    """J = #{(h, k) in [1, H]^2 : h/k is an e-th power residue mod p}.

    h/k is an e-th power residue iff h^{(p-1)/e} and k^{(p-1)/e} agree, so J
    is the sum of squared class sizes of that criterion value.
    """
    if e <= 0 or (p - 1) % e != 0:
        raise ValueError(f"e={e} must divide p-1={p - 1}")
    if not 1 <= H < p:
        raise ValueError("H must satisfy 1 <= H < p")
    h = np.arange(1, H + 1, dtype=np.int64)
    crit = pow_mod_array(h, (p - 1) // e, p)
    _, sizes = np.unique(crit, return_counts=True)
    return int(np.sum(sizes.astype(object) ** 2))


def ratio_residue_monitors(p: int, e: int, H: int,
                           ceiling: float = DEFAULT_RATIO_CEILING) -> list[BoundCheck]:
    """MONITORED: J against H * (H + p^{1/n}) / e^{1/n} for n in {1, 2, 3}."""
    J = count_ratio_power_residues(p, e, H)
    return [
        monitored_check(f"ratio_residues(p={p},e={e},H={H},n={n})",
                        J, H * (H + p ** (1 / n)) / e ** (1 / n), ceiling)
        for n in (1, 2, 3)
    ]
