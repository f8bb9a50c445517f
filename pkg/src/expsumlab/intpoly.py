"""Exact integer-polynomial engine for the common-zero certificates.

Dense big-integer polynomials, subresultant pseudo-remainder sequences for
GCDs over Q and resultants, the structured factorization of
F_l(y) = (y+1)^l - y^l - 1, common-zero counts N_p(r, s), the resultant
divisibility certificate, and a numeric Mahler-measure diagnostic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

import numpy as np
from gmpy2 import mpz as _mpz

from .checks import DEFAULT_RATIO_CEILING, BoundCheck, monitored_check
from .ffcore import pow_mod_array, primes_up_to


class IntPoly:
    """Dense polynomial over Z; coeffs[i] is the coefficient of X^i.

    Canonical form: no trailing zero coefficients; the zero polynomial has
    an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls()

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    # -- basic structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero:
            return "IntPoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*X^{i}" if i else str(c))
        return "IntPoly(" + " + ".join(reversed(terms)) + ")"

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs))
        if self.is_zero or other.is_zero:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative power")
        return reduce(lambda acc, _: acc * self, range(n), IntPoly.one())

    def evaluate(self, x):
        """Horner evaluation; works for int, float and complex arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_mod(self, y: int, p: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * y + c) % p
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def content(self) -> int:
        """GCD of the coefficients (0 for the zero polynomial)."""
        return reduce(math.gcd, (abs(c) for c in self.coeffs), 0)

    def primitive_part(self) -> "IntPoly":
        """Content stripped, leading coefficient made positive."""
        if self.is_zero:
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return IntPoly(tuple(q // c for q in self.coeffs))

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        """Quotient self / other, raising if the division is not exact over Z."""
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        d = other.degree
        lcb = other.lc
        if self.is_zero:
            return IntPoly()
        if self.degree < d:
            raise ArithmeticError(f"inexact division: {self!r} / {other!r}")
        quot = [0] * (self.degree - d + 1)
        for k in range(self.degree - d, -1, -1):
            head = rem[k + d]
            if head % lcb:
                raise ArithmeticError(f"inexact division: {self!r} / {other!r}")
            q = head // lcb
            quot[k] = q
            if q:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= q * b
        if any(rem[:d]):
            raise ArithmeticError(f"inexact division: {self!r} / {other!r}")
        return IntPoly(quot)


def _pseudo_rem(a: list, b: list) -> list:
    """prem(a, b) = lc(b)^(deg a - deg b + 1) * a mod b on coefficient lists
    (ascending, no trailing zeros); the lists hold gmpy2 mpz for speed."""
    db = len(b) - 1
    d = len(a) - 1 - db
    lcb = b[-1]
    rem = list(a)
    for k in range(d, -1, -1):
        head = rem[db + k]
        for i in range(db + k):
            rem[i] *= lcb
        if head:
            for j in range(db):
                rem[j + k] -= head * b[j]
        rem[db + k] = 0
    out = rem[:db]
    while out and out[-1] == 0:
        out.pop()
    return out


def _mpz_coeffs(f: IntPoly) -> list:
    return [_mpz(c) for c in f.coeffs]


def subresultant_prs(f: IntPoly, g: IntPoly) -> list[IntPoly]:
    """Subresultant polynomial remainder sequence starting from (f, g)."""
    if f.is_zero or g.is_zero:
        raise ValueError("PRS undefined for the zero polynomial")
    if f.degree < g.degree:
        f, g = g, f
    seq = [f, g]
    a, b = _mpz_coeffs(f), _mpz_coeffs(g)
    gg, h = _mpz(1), _mpz(1)
    while b and len(b) - 1 > 0:
        d = len(a) - len(b)
        r = _pseudo_rem(a, b)
        if not r:
            seq.append(IntPoly())
            break
        divisor = gg * h**d
        a, b = b, [c // divisor for c in r]
        seq.append(IntPoly(b))
        gg = a[-1]
        h = gg**d // h ** (d - 1) if d > 0 else h
    return seq


def poly_gcd_Q(f: IntPoly, g: IntPoly) -> IntPoly:
    """GCD over Q, normalized primitive with positive leading coefficient."""
    if f.is_zero and g.is_zero:
        raise ValueError("gcd(0, 0) undefined")
    if f.is_zero:
        return g.primitive_part()
    if g.is_zero:
        return f.primitive_part()
    seq = subresultant_prs(f, g)
    last = seq[-1] if not seq[-1].is_zero else seq[-2]
    if last.degree == 0:
        return IntPoly.one()
    return last.primitive_part()


def is_squarefree(f: IntPoly) -> bool:
    """True iff gcd(f, f') is constant."""
    if f.degree < 1:
        raise ValueError("squarefreeness needs degree >= 1")
    return poly_gcd_Q(f, f.derivative()).degree == 0


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Resultant by subresultant PRS; sign matches the Sylvester determinant."""
    if f.is_zero or g.is_zero:
        raise ValueError("resultant of the zero polynomial is not supported")
    if f.degree == 0 and g.degree == 0:
        return 1
    s = 1
    a, b = f, g
    if a.degree < b.degree:
        if a.degree % 2 == 1 and b.degree % 2 == 1:
            s = -s
        a, b = b, a
    if b.degree == 0:
        return s * b.coeffs[0] ** a.degree
    ca, cb = a.content(), b.content()
    t = _mpz(ca) ** b.degree * _mpz(cb) ** a.degree
    ac = [_mpz(c // ca) for c in a.coeffs]
    bc = [_mpz(c // cb) for c in b.coeffs]
    gg, h = _mpz(1), _mpz(1)
    while True:
        d = len(ac) - len(bc)
        if (len(ac) - 1) % 2 == 1 and (len(bc) - 1) % 2 == 1:
            s = -s
        r = _pseudo_rem(ac, bc)
        if not r:
            return 0  # common nonconstant factor
        divisor = gg * h**d
        ac, bc = bc, [c // divisor for c in r]
        gg = ac[-1]
        h = gg**d // h ** (d - 1) if d > 0 else h
        if len(bc) == 1:
            da = len(ac) - 1
            return int(s * t * (bc[0] ** da // h ** (da - 1)))


# ---------------------------------------------------------------------------
# The polynomials F_l(y) = (y+1)^l - y^l - 1 and their certificates.
# ---------------------------------------------------------------------------

_X = IntPoly.x()
_XP1 = IntPoly((1, 1))
_CYCLO3 = IntPoly((1, 1, 1))  # X^2 + X + 1
_TRIVIAL_FACTOR = _X * _XP1 * _CYCLO3


def build_F(ell: int) -> IntPoly:
    """F_l(y) = (y+1)^l - y^l - 1, exactly; F_1 is the zero polynomial."""
    if ell < 1:
        raise ValueError("exponent must be >= 1")
    return IntPoly(tuple(math.comb(ell, i) if 0 < i < ell else 0
                         for i in range(ell)))


@dataclass(frozen=True)
class FrStructure:
    """Exact factorization F_r = X (X+1)^a (X^2+X+1)^b G_r."""

    r: int
    a: int
    b: int
    G: IntPoly


def factor_structure(r: int) -> FrStructure:
    """Split off the forced factors of F_r; the exponent pair (a, b) depends
    only on r mod 6 (even r: a=b=0; odd r: a=1 and b = 0/1/2 for
    r = 3/5/1 mod 6).  Any inexact division here is a fatal internal error.
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    if r % 2 == 0:
        a, b = 0, 0
    else:
        a = 1
        b = {3: 0, 5: 1, 1: 2}[r % 6]
    G = build_F(r).exact_div(_X)
    for _ in range(a):
        G = G.exact_div(_XP1)
    for _ in range(b):
        G = G.exact_div(_CYCLO3)
    if poly_gcd_Q(G, _TRIVIAL_FACTOR).degree != 0:
        raise AssertionError(f"G_{r} shares a factor with X(X+1)(X^2+X+1)")
    return FrStructure(r=r, a=a, b=b, G=G)


_GCD_LEMMA_SET = (
    _X,
    _X * _XP1,
    _X * _XP1 * _CYCLO3,
    _X * _XP1 * _CYCLO3 * _CYCLO3,
)


def compute_D(r: int, s: int) -> IntPoly:
    """D_{r,s} = gcd(F_r, F_s) over Q; must land in the four-polynomial set
    {X, X(X+1), X(X+1)(X^2+X+1), X(X+1)(X^2+X+1)^2}."""
    if not r > s > 1:
        raise ValueError("need r > s > 1")
    D = poly_gcd_Q(build_F(r), build_F(s))
    if D not in _GCD_LEMMA_SET:
        raise AssertionError(f"gcd(F_{r}, F_{s}) = {D!r} outside the expected set")
    return D


def compute_R(r: int, s: int) -> int:
    """R_{r,s} = Res(F_r / D_{r,s}, F_s / D_{r,s}); always nonzero."""
    D = compute_D(r, s)
    phi_r = build_F(r).exact_div(D)
    phi_s = build_F(s).exact_div(D)
    R = resultant(phi_r, phi_s)
    if R == 0:
        raise AssertionError(f"R_{{{r},{s}}} vanished; contradicts coprimality")
    return R


def resultant_size_monitor(r: int, s: int, R: int, c: float = 3.0,
                           ceiling: float = DEFAULT_RATIO_CEILING) -> BoundCheck:
    """MONITORED: ln|R_{r,s}| <= c * r * s."""
    return monitored_check(f"log_resultant(r={r},s={s})",
                           float(abs(R).bit_length()) * math.log(2), c * r * s,
                           ceiling)


@dataclass(frozen=True)
class ZeroCertificate:
    """Common-zero count of F_r and F_s mod p with the resultant witness."""

    p: int
    r: int
    s: int
    N: int
    zeros: tuple[int, ...]  # y in [1, p-2] with F_r(y) = F_s(y) = 0 mod p
    boundary_zeros: tuple[int, ...]  # common zeros at y in {0, p-1}, reported apart
    D: IntPoly
    R: int
    divisibility_ok: bool

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "r": self.r,
            "s": self.s,
            "N": self.N,
            "zeros": list(self.zeros),
            "boundary_zeros": list(self.boundary_zeros),
            "D_coeffs": list(self.D.coeffs),
            "R_decimal_string": str(self.R),
            "divisibility_ok": self.divisibility_ok,
        }


def _common_zeros(p: int, r: int, s: int) -> tuple[list[int], list[int]]:
    """Interior common zeros (y and y+1 both nonzero mod p) and the boundary
    common zeros at y in {0, p-1}."""
    y = np.arange(1, p - 1, dtype=np.int64)
    fr = np.mod(pow_mod_array(y + 1, r, p) - pow_mod_array(y, r, p) - 1, p)
    fs = np.mod(pow_mod_array(y + 1, s, p) - pow_mod_array(y, s, p) - 1, p)
    interior = (y[(fr == 0) & (fs == 0)]).tolist()
    boundary = [0]  # F_l(0) = 0 always
    if r % 2 == 1 and s % 2 == 1:
        boundary.append(p - 1)  # F_l(-1) = 0 exactly for odd l
    return interior, boundary


def divides_certificate(p: int, N: int, R: int) -> bool:
    """p^max(N-4, 0) divides R."""
    e = max(N - 4, 0)
    return e == 0 or R % p**e == 0


def count_common_zeros(p: int, r: int, s: int) -> ZeroCertificate:
    """N_p(r, s) plus the full certificate (zeros, D, R, divisibility)."""
    if not r > s > 1:
        raise ValueError("need r > s > 1")
    interior, boundary = _common_zeros(p, r, s)
    D = compute_D(r, s)
    R = compute_R(r, s)
    N = len(interior)
    return ZeroCertificate(
        p=p, r=r, s=s, N=N, zeros=tuple(interior), boundary_zeros=tuple(boundary),
        D=D, R=R, divisibility_ok=divides_certificate(p, N, R),
    )


def verify_divisibility(p: int, r: int, s: int) -> bool:
    """True iff p^max(N_p(r,s) - 4, 0) divides R_{r,s}."""
    interior, _ = _common_zeros(p, r, s)
    return divides_certificate(p, len(interior), compute_R(r, s))


def zero_sets_mod_p(p: int, r_max: int) -> dict[int, frozenset[int]]:
    """Zero sets {y in [1, p-2] : F_r(y) = 0 mod p} for every 2 <= r <= r_max,
    computed with incremental powers (O(r_max * p) total)."""
    y = np.arange(1, p - 1, dtype=np.int64)
    yp1 = np.mod(y + 1, p)
    a = yp1.copy()  # (y+1)^r
    b = y.copy()  # y^r
    out = {}
    for r in range(2, r_max + 1):
        np.mod(a * yp1, p, out=a)
        np.mod(b * y, p, out=b)
        out[r] = frozenset((y[np.mod(a - b - 1, p) == 0]).tolist())
    return out


def exceptional_primes(r: int, s: int, p_max: int, cross_check: bool = False) -> list[int]:
    """Primes p <= p_max dividing R_{r,s}.  With cross_check, verify that every
    non-listed prime has at most 4 interior common zeros (fatal otherwise)."""
    if not r > s > 1:
        raise ValueError("need r > s > 1")
    if p_max < 2:
        raise ValueError("p_max must be >= 2")
    R = abs(compute_R(r, s))
    out = [p for p in primes_up_to(p_max) if R % p == 0]
    if cross_check:
        listed = set(out)
        for p in primes_up_to(p_max):
            if p not in listed:
                interior, _ = _common_zeros(p, r, s)
                if len(interior) > 4:
                    raise AssertionError(
                        f"N_{p}({r},{s}) = {len(interior)} > 4 although p does not divide R")
    return out


def omega_monitor(r: int, s: int, n_primes: int, R: int, c: float = 4.0,
                  ceiling: float = DEFAULT_RATIO_CEILING) -> BoundCheck:
    """MONITORED: number of distinct prime divisors against c ln|R| / ln ln(|R|+2)."""
    lr = float(abs(R).bit_length()) * math.log(2)
    bound = c * lr / math.log(math.log(abs(R) + 2))
    return monitored_check(f"omega(r={r},s={s})", n_primes, bound, ceiling)


def mahler_measure(f: IntPoly, tol: float = 1e-9) -> float:
    """|lc(f)| * prod max(1, |root|) over the complex roots, numerically.

    Primary route: companion-matrix eigenvalues (numpy's balanced QR).
    Consistency check: the measure is invariant under coefficient reversal
    once powers of X are stripped; disagreement beyond the tolerance floor
    raises with diagnostics.
    """
    if f.degree < 1:
        raise ValueError("Mahler measure needs degree >= 1")
    if not 0 < tol <= 1e-3:
        raise ValueError("tol must lie in (0, 1e-3]")

    def _measure(coeffs: tuple[int, ...]) -> float:
        roots = np.roots([float(c) for c in reversed(coeffs)])
        return abs(coeffs[-1]) * float(np.prod(np.maximum(1.0, np.abs(roots))))

    cs = list(f.coeffs)
    while cs[0] == 0:  # factors of X contribute measure 1
        cs.pop(0)
    if len(cs) == 1:
        return float(abs(cs[0]))
    m1 = _measure(tuple(cs))
    m2 = _measure(tuple(reversed(cs)))
    scale = max(1.0, m1)
    if abs(m1 - m2) > max(tol, 1e-8) * scale * 100:
        raise RuntimeError(
            f"Mahler measure did not converge: forward {m1} vs reversed {m2}")
    return m1
