"""Level-one classical modular forms as exact q-expansions.

Coefficient lists are exact rationals (plain ints on the common integral
path).  Series multiplication packs integer coefficient lists into big
integers (Kronecker substitution), which turns an O(N^2) schoolbook
convolution into a handful of CPython bigint multiplies; N = 5000 series
products run in milliseconds this way.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import List, Sequence

from .exact import rat


class NonRationalEigenspace(ValueError):
    """Raised for weights whose eigenforms need coefficient fields."""


class PrecisionError(ValueError):
    """Raised when an operation needs more coefficients than are known."""


RATIONAL_EIGEN_WEIGHTS = (12, 16, 18, 20, 22, 26)

# ---------------------------------------------------------------------------
# integer-list convolution via Kronecker substitution

def _convolve_int(a: Sequence[int], b: Sequence[int], n: int) -> List[int]:
    """First n coefficients of the product of two integer coefficient lists."""
    a = list(a[:n])
    b = list(b[:n])
    if not a or not b:
        return [0] * n
    apos = [x if x > 0 else 0 for x in a]
    aneg = [-x if x < 0 else 0 for x in a]
    bpos = [x if x > 0 else 0 for x in b]
    bneg = [-x if x < 0 else 0 for x in b]
    ma = max(max(apos), max(aneg))
    mb = max(max(bpos), max(bneg))
    if ma == 0 or mb == 0:
        return [0] * n
    bits = (ma * mb * min(len(a), len(b))).bit_length() + 1

    def pack(xs):
        out = 0
        for i in reversed(range(len(xs))):
            out = (out << bits) | xs[i]
        return out

    prod = pack(apos) * pack(bpos) + pack(aneg) * pack(bneg) - pack(apos) * pack(bneg) - pack(aneg) * pack(bpos)
    # signed digit extraction in base 2^bits with borrow handling
    out = []
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    carry = 0
    val = prod
    for _ in range(n):
        digit = (val & mask) + carry
        val >>= bits
        if digit >= half:
            digit -= 1 << bits
            carry = 1
        else:
            carry = 0
        out.append(digit)
    return out


def _mul_rational_lists(a: Sequence[Fraction], b: Sequence[Fraction], n: int) -> List[Fraction]:
    da = lcm(*(x.denominator for x in a[:n])) if a else 1
    db = lcm(*(x.denominator for x in b[:n])) if b else 1
    ia = [int(x * da) for x in a[:n]]
    ib = [int(x * db) for x in b[:n]]
    conv = _convolve_int(ia, ib, n)
    d = da * db
    return [Fraction(c, d) for c in conv]


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QExpansion:
    """Truncated q-series: coefficients of q^0 .. q^(precision-1)."""

    weight: Fraction
    level: int
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "weight", rat(self.weight))
        object.__setattr__(self, "coeffs", tuple(rat(c) for c in self.coeffs))

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def coeff(self, n: int) -> Fraction:
        if not 0 <= n < self.precision:
            raise PrecisionError(f"coefficient {n} beyond precision {self.precision}")
        return self.coeffs[n]

    def __add__(self, other: "QExpansion") -> "QExpansion":
        if self.weight != other.weight or self.level != other.level:
            raise ValueError("weight/level mismatch in addition")
        n = min(self.precision, other.precision)
        return QExpansion(self.weight, self.level, tuple(x + y for x, y in zip(self.coeffs[:n], other.coeffs[:n])))

    def __sub__(self, other: "QExpansion") -> "QExpansion":
        return self + other.scale(-1)

    def scale(self, c) -> "QExpansion":
        c = rat(c)
        return QExpansion(self.weight, self.level, tuple(c * x for x in self.coeffs))

    def __mul__(self, other: "QExpansion") -> "QExpansion":
        if self.level != other.level:
            raise ValueError("level mismatch in multiplication")
        n = min(self.precision, other.precision)
        return QExpansion(
            self.weight + other.weight,
            self.level,
            tuple(_mul_rational_lists(self.coeffs, other.coeffs, n)),
        )

    def __pow__(self, k: int) -> "QExpansion":
        if k < 0:
            raise ValueError("negative powers unsupported")
        out = QExpansion(Fraction(0), self.level, (Fraction(1),) + (Fraction(0),) * (self.precision - 1))
        base = self
        while k:
            if k & 1:
                out = out * base
            if k > 1:
                base = base * base
            k >>= 1
        return out

    def dump(self) -> str:
        """Cache file format: header 'weight level N', then exact rationals."""
        w = self.weight
        head = f"{w.numerator}/{w.denominator}" if w.denominator != 1 else str(w.numerator)
        lines = [f"{head} {self.level} {self.precision}"]
        lines += [f"{c.numerator}/{c.denominator}" for c in self.coeffs]
        return "\n".join(lines) + "\n"

    @classmethod
    def load(cls, text: str) -> "QExpansion":
        lines = text.strip().splitlines()
        wtok, level, n = lines[0].split()
        coeffs = [Fraction(t) for t in lines[1 : 1 + int(n)]]
        if len(coeffs) != int(n):
            raise ValueError("truncated cache file")
        return cls(Fraction(wtok), int(level), tuple(coeffs))


# ---------------------------------------------------------------------------
# generators of the level-one graded ring

_cache_lock = threading.Lock()
_series_cache: dict = {}


def _cached(key, builder):
    with _cache_lock:
        hit = _series_cache.get(key)
    if hit is not None:
        return hit
    val = builder()
    with _cache_lock:
        _series_cache[key] = val
    return val


def _sigma_list(k: int, n: int) -> List[int]:
    """[sigma_k(1), ..., sigma_k(n-1)] by divisor sieving."""
    out = [0] * n
    for d in range(1, n):
        dk = d**k
        for m in range(d, n, d):
            out[m] += dk
    return out


def eisenstein(weight: int, prec: int) -> QExpansion:
    """E4 or E6, normalized to constant term 1."""
    if weight not in (4, 6):
        raise ValueError("only weights 4 and 6 generate the level-one ring")
    if prec < 2:
        raise ValueError("precision must be at least 2")

    def build():
        mult = 240 if weight == 4 else -504
        sig = _sigma_list(weight - 1, prec)
        coeffs = [Fraction(1)] + [Fraction(mult * sig[n]) for n in range(1, prec)]
        return QExpansion(Fraction(weight), 1, tuple(coeffs))

    return _cached(("eis", weight, prec), build)


def delta(prec: int) -> QExpansion:
    """The discriminant cusp form (E4^3 - E6^2)/1728."""

    def build():
        e4 = eisenstein(4, prec)
        e6 = eisenstein(6, prec)
        num = e4 * e4 * e4 - e6 * e6
        coeffs = []
        for c in num.coeffs:
            q, r = divmod(c.numerator, 1728 * c.denominator)
            if r:
                raise AssertionError("E4^3 - E6^2 not divisible by 1728")
            coeffs.append(Fraction(q))
        return QExpansion(Fraction(12), 1, tuple(coeffs))

    return _cached(("delta", prec), build)


def hecke_Tp(f: QExpansion, p: int) -> QExpansion:
    """T_p on level-one integral weight 2k:
    a(n) -> a(pn) + p^(2k-1) a(n/p); output precision floor(prec/p)."""
    if f.level != 1 or f.weight.denominator != 1:
        raise ValueError("T_p implemented for integral-weight level-one forms")
    two_k = int(f.weight)
    n_out = f.precision // p
    if n_out < 2:
        raise PrecisionError("insufficient precision for T_p")
    pw = p ** (two_k - 1)
    coeffs = []
    for n in range(n_out):
        c = f.coeffs[p * n]
        if n % p == 0:
            c += pw * f.coeffs[n // p]
        coeffs.append(c)
    return QExpansion(f.weight, 1, tuple(coeffs))


def eigenform(two_k: int, prec: int) -> QExpansion:
    """The normalized rational eigenform in the listed one-dimensional
    cuspidal weights; built multiplicatively from the ring generators."""
    if two_k not in RATIONAL_EIGEN_WEIGHTS:
        raise NonRationalEigenspace("non-rational eigenspace unsupported")

    def build():
        f = delta(prec)
        extra = {12: (0, 0), 16: (1, 0), 18: (0, 1), 20: (2, 0), 22: (1, 1), 26: (2, 1)}[two_k]
        for _ in range(extra[0]):
            f = f * eisenstein(4, prec)
        for _ in range(extra[1]):
            f = f * eisenstein(6, prec)
        return f

    return _cached(("eigen", two_k, prec), build)


# ---------------------------------------------------------------------------
# Satake parameters

@dataclass(frozen=True)
class SatakeRecord:
    p: int
    a_p: Fraction
    two_k: int
    alpha: complex

    def check(self, tol=1e-10) -> bool:
        unit = abs(abs(self.alpha) - 1.0) < 1e-12
        trace = abs((self.alpha + 1 / self.alpha).real - float(self.a_p) / self.p ** ((self.two_k - 1) / 2)) < tol
        return unit and trace and abs((self.alpha + 1 / self.alpha).imag) < tol


def satake(f: QExpansion, p: int) -> SatakeRecord:
    """Unitary Satake parameter at p: the root of
    X^2 - (a_p / p^((2k-1)/2)) X + 1 with nonnegative imaginary part."""
    two_k = int(f.weight)
    a_p = f.coeff(p)
    b = float(a_p) / p ** ((two_k - 1) / 2)
    if abs(b) > 2:
        raise ValueError("Deligne bound violated; upstream eigenform is wrong")
    disc = 4 - b * b
    alpha = complex(b / 2, disc**0.5 / 2)
    if alpha.imag == 0 and alpha.real < 1:
        alpha = complex(b / 2, 0.0)  # tie branch: real part >= 1 not reachable here
    return SatakeRecord(p=p, a_p=a_p, two_k=two_k, alpha=alpha)


def _factor_rational(r: Fraction):
    """Prime factorization of a nonzero rational as {p: exponent}."""
    out = {}
    for val, sign in ((r.numerator, 1), (r.denominator, -1)):
        n = abs(val)
        p = 2
        while p * p <= n:
            while n % p == 0:
                out[p] = out.get(p, 0) + sign
                n //= p
            p += 1 if p == 2 else 2
        if n > 1:
            out[n] = out.get(n, 0) + sign
    return {p: e for p, e in out.items() if e}


def mu_f(f: QExpansion, r) -> complex:
    """The unramified character value prod_p alpha_p^{v_p(r)} at a nonzero
    rational r; units (including -1) contribute nothing."""
    r = rat(r)
    if r == 0:
        raise ValueError("mu_f undefined at 0")
    out = complex(1, 0)
    for p, e in _factor_rational(r).items():
        out *= satake(f, p).alpha ** e
    return out
