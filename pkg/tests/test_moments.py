import cmath
import math

import pytest

from expsumlab import (PrimeContext, count_Q, direct_cubic_moment,
                       holder_check, low_moments, moment_report)


def _naive_T(p, r, s, a1, a2, a3):
    return sum(cmath.exp(2j * math.pi *
                         ((a1 * pow(x, r, p) + a2 * pow(x, s, p) + a3 * x) % p) / p)
               for x in range(1, p))


def test_trinomial_table_vs_naive():
    from expsumlab.moments import _trinomial_table
    p, r, s = 7, 5, 3
    T = _trinomial_table(PrimeContext.create(p), r, s)
    for a1 in range(p):
        for a2 in range(p):
            for a3 in (0, 1, 5):
                assert abs(T[a1, a2, a3] - _naive_T(p, r, s, a1, a2, a3)) < 1e-9


def test_count_Q_goldens():
    # brute force over (y, z) runs internally for these p and must agree
    assert count_Q(7, 7, 5) == 12
    assert count_Q(11, 5, 3) == 0
    assert count_Q(13, 7, 5) == 24


def test_cubic_moment_equals_count():
    for (p, r, s) in ((7, 5, 3), (7, 7, 5), (11, 5, 3), (13, 7, 5)):
        M = direct_cubic_moment(PrimeContext.create(p), r, s)
        assert abs(M - count_Q(p, r, s)) < 1e-5 * p
        assert abs(M.imag) < 1e-6 * p


def test_low_moments_identities():
    for (p, r, s) in ((7, 5, 3), (11, 5, 3), (13, 7, 5)):
        first, second = low_moments(PrimeContext.create(p), r, s)
        assert abs(first) < 1e-6 * p
        assert abs(second - (p - 1)) < 1e-6 * p


def test_holder_lower_bound():
    for (p, r, s) in ((7, 5, 3), (13, 7, 5)):
        chk = holder_check(PrimeContext.create(p), r, s)
        assert chk.kind == "HARD" and chk.lower_bound and chk.passed
        assert chk.observed >= (p - 1) ** 1.5 - 1e-5 * p**1.5


def test_moment_report_roundtrip():
    rep = moment_report(PrimeContext.create(7), 7, 5)
    assert rep.identities_ok
    assert rep.Q_exact == 12 and rep.N == 2
    assert '"Q_exact": "12"' in rep.to_json()


def test_direct_moment_cap():
    with pytest.raises(ValueError):
        direct_cubic_moment(PrimeContext.create(131), 5, 3)
    with pytest.raises(ValueError):
        direct_cubic_moment(PrimeContext.create(7), 5, 5)
