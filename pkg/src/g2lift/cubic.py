"""Binary cubic forms, their quartic invariant, cubic rings, and the
reduction of a vector to the shape (t, 0, S/3, 0).

A vector w = (a1, a2, a3, a4) is identified with the binary cubic
f_w(u, v) = a1 u^3 + 3 a2 u^2 v + 3 a3 u v^2 + a4 v^3; the lattice
condition is a1, a4 integral and 3 a2, 3 a3 integral, so (a, b, c, d) =
(a1, 3 a2, 3 a3, a4) is an integral cubic form in the classical sense.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import NamedTuple, Optional, Tuple

from .exact import Matrix2, mat2, rat


class NonEtaleInput(ValueError):
    """Raised when an operation needs q(w) != 0 and gets a degenerate w."""


class CubicFieldOrbitUnsupported(ValueError):
    """Raised when a reduction needs a rational root and none exists."""


class CubicVector(NamedTuple):
    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction

    @classmethod
    def of(cls, a1, a2, a3, a4) -> "CubicVector":
        return cls(rat(a1), rat(a2), rat(a3), rat(a4))

    def is_lattice(self) -> bool:
        """a1, a4 in Z and a2, a3 in (1/3)Z."""
        return (
            self.a1.denominator == 1
            and self.a4.denominator == 1
            and (3 * self.a2).denominator == 1
            and (3 * self.a3).denominator == 1
        )

    def integral_form(self) -> Tuple[int, int, int, int]:
        """(a, b, c, d) = (a1, 3 a2, 3 a3, a4); requires the lattice flag."""
        if not self.is_lattice():
            raise ValueError("vector is not in the integral lattice")
        return (int(self.a1), int(3 * self.a2), int(3 * self.a3), int(self.a4))


def _vec(w) -> CubicVector:
    if isinstance(w, CubicVector):
        return w
    return CubicVector.of(*w)


def quartic_q(w) -> Fraction:
    """The quartic invariant
    -3 a2^2 a3^2 + 4 a1 a3^3 + 4 a2^3 a4 - 6 a1 a2 a3 a4 + a1^2 a4^2,
    equal to -disc(f_w)/27 and satisfying q(rho3(A, w)) = det(A)^6 q(w)."""
    a1, a2, a3, a4 = _vec(w)
    return (
        -3 * a2**2 * a3**2
        + 4 * a1 * a3**3
        + 4 * a2**3 * a4
        - 6 * a1 * a2 * a3 * a4
        + a1**2 * a4**2
    )


def form_disc(a: int, b: int, c: int, d: int) -> int:
    """Discriminant of a x^3 + b x^2 y + c x y^2 + d y^3."""
    return 18 * a * b * c * d - 4 * b**3 * d + b * b * c * c - 4 * a * c**3 - 27 * a * a * d * d


def is_totally_real(w) -> bool:
    """All projective roots of f_w over R are real.

    Projectively a vanishing leading coefficient contributes the real root
    at infinity, so the test reduces to disc(f_w) = -27 q(w) >= 0.
    """
    return quartic_q(w) <= 0


# ---------------------------------------------------------------------------
# Rational root finding for binary cubics

def _int_divisors(n: int):
    n = abs(n)
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def _integral_coeffs(w: CubicVector) -> Tuple[int, int, int, int]:
    """Clear denominators of (a1, 3a2, 3a3, a4); only the root set matters."""
    a1, a2, a3, a4 = w
    den = 1
    for x in (a1, 3 * a2, 3 * a3, a4):
        den = den * x.denominator // gcd(den, x.denominator)
    return (int(a1 * den), int(3 * a2 * den), int(3 * a3 * den), int(a4 * den))


def _quad_proj_roots(A: int, B: int, C: int) -> list[Tuple[int, int]]:
    """Rational projective roots of A u^2 + B u v + C v^2."""
    if A == 0:
        if B == 0:
            return [(1, 0)] if C != 0 else []
        return [(1, 0), (-C, B)]
    disc = B * B - 4 * A * C
    if disc < 0:
        return []
    r = isqrt(disc)
    if r * r != disc:
        return []
    return [(-B + r, 2 * A)] if r == 0 else [(-B + r, 2 * A), (-B - r, 2 * A)]


def rational_projective_roots(w) -> list[Tuple[int, int]]:
    """All rational projective roots of f_w as primitive pairs (u0, v0),
    sorted; the root at infinity is (1, 0).  Multiplicity not reported."""
    a, b, c, d = _integral_coeffs(_vec(w))
    if a == 0 and b == 0 and c == 0 and d == 0:
        raise NonEtaleInput("zero form has no root divisor")
    if a == 0:
        roots = [(1, 0)] + _quad_proj_roots(b, c, d)
    elif d == 0:
        roots = [(0, 1)] + _quad_proj_roots(a, b, c)
    else:
        roots = []
        cands = set()
        for p in _int_divisors(d):
            for q in _int_divisors(a):
                cands.add((p, q))
                cands.add((-p, q))
        for (p, q) in cands:
            if a * p**3 + b * p * p * q + c * p * q * q + d * q**3 == 0:
                roots.append((p, q))
    seen = []
    for (u0, v0) in roots:
        g = gcd(abs(u0), abs(v0)) or 1
        u0, v0 = u0 // g, v0 // g
        if v0 < 0 or (v0 == 0 and u0 < 0):
            u0, v0 = -u0, -v0
        if (u0, v0) not in seen:
            seen.append((u0, v0))
    return sorted(seen)


def _squarefree_part(n: int) -> int:
    """Squarefree representative of the square class of n (sign kept)."""
    if n == 0:
        return 0
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if e % 2:
                out *= p
        p += 1 if p == 2 else 2
    return sign * out * n


def fundamental_discriminant_of_class(r: Fraction) -> Tuple[int, Fraction]:
    """Minimal positive integer D0 == 0, 1 (mod 4) in the square class of
    the positive rational r, with the scale lam > 0, lam^2 * r = D0."""
    if r <= 0:
        raise ValueError("positive rational expected")
    u = _squarefree_part(r.numerator * r.denominator)
    d0 = u if u % 4 == 1 else 4 * u
    ratio = Fraction(d0) / r
    lam = Fraction(isqrt(ratio.numerator), isqrt(ratio.denominator))
    assert lam * lam * r == d0, "square-class arithmetic broke"
    return d0, lam


# ---------------------------------------------------------------------------
# Etale type

@dataclass(frozen=True)
class EtaleType:
    kind: str  # "totally_split" | "quadratic_split" | "cubic_field"
    quad_disc: Optional[int] = None  # field discriminant in the quadratic case
    real_quadratic: Optional[bool] = None
    cubic_poly: Optional[Tuple[int, int, int, int]] = None  # (a, b, c, d) of f

    def __str__(self):
        if self.kind == "totally_split":
            return "Q^3"
        if self.kind == "quadratic_split":
            return f"Q x Q(sqrt({self.quad_disc}))" + ("" if self.real_quadratic else " (imaginary)")
        a, b, c, d = self.cubic_poly
        return f"cubic field [{a},{b},{c},{d}]"


def etale_type(w) -> EtaleType:
    """Exact factorization type of f_w over Q; requires q(w) != 0."""
    w = _vec(w)
    if quartic_q(w) == 0:
        raise NonEtaleInput("non-etale input")
    roots = rational_projective_roots(w)
    a, b, c, d = _integral_coeffs(w)
    if len(roots) == 3:
        return EtaleType("totally_split")
    if len(roots) == 1:
        u0, v0 = roots[0]
        # f = (v0 u - u0 v) * (A u^2 + B u v + C v^2) up to a rational scalar
        if v0 != 0:
            A = Fraction(a, v0)
            B = (Fraction(b) + A * u0) / v0
            C = (Fraction(c) + B * u0) / v0
        else:  # root at infinity: f = v * (b u^2 + c u v + d v^2)
            A, B, C = Fraction(b), Fraction(c), Fraction(d)
        disc2 = B * B - 4 * A * C
        d0 = _squarefree_part(disc2.numerator * disc2.denominator)
        field_disc = d0 if d0 % 4 == 1 else 4 * d0
        return EtaleType("quadratic_split", quad_disc=field_disc, real_quadratic=disc2 > 0)
    if not roots:
        return EtaleType("cubic_field", cubic_poly=(a, b, c, d))
    raise NonEtaleInput("inconsistent root count for a separable cubic")


# ---------------------------------------------------------------------------
# Cubic rings (integral forms only)

@dataclass(frozen=True)
class CubicRing:
    """Rank-3 ring with basis (1, omega, theta) attached to an integral
    binary cubic (a, b, c, d):

        omega * theta = -a d
        omega^2 = -a c + b omega - a theta
        theta^2 = -b d + d omega - c theta
    """

    a: int
    b: int
    c: int
    d: int

    @property
    def discriminant(self) -> int:
        return form_disc(self.a, self.b, self.c, self.d)

    def multiply(self, x, y):
        """Product of coordinate vectors on the basis (1, omega, theta)."""
        a, b, c, d = self.a, self.b, self.c, self.d
        x0, x1, x2 = x
        y0, y1, y2 = y
        ww = (-a * c, b, -a)
        tt = (-b * d, d, -c)
        wt = (-a * d, 0, 0)
        cross = x1 * y2 + x2 * y1
        return (
            x0 * y0 + x1 * y1 * ww[0] + x2 * y2 * tt[0] + cross * wt[0],
            x0 * y1 + x1 * y0 + x1 * y1 * ww[1] + x2 * y2 * tt[1],
            x0 * y2 + x2 * y0 + x1 * y1 * ww[2] + x2 * y2 * tt[2],
        )

    def trace_matrix(self):
        a, b, c, d = self.a, self.b, self.c, self.d
        return (
            (3, b, -c),
            (b, b * b - 2 * a * c, -3 * a * d),
            (-c, -3 * a * d, c * c - 2 * b * d),
        )


def cubic_ring(w) -> CubicRing:
    """The cubic ring of a lattice vector; discriminant is -27 q(w)."""
    w = _vec(w)
    if not w.is_lattice():
        raise ValueError("vector is not in the integral lattice")
    return CubicRing(*w.integral_form())


def transformed_form(a, b, c, d, M):
    """Coefficients of f(p x + r y, q x + s y) for M = ((p, r), (q, s))."""
    (p, r), (q, s) = M
    A = a * p**3 + b * p * p * q + c * p * q * q + d * q**3
    B = (
        3 * a * p * p * r
        + b * (p * p * s + 2 * p * q * r)
        + c * (q * q * r + 2 * p * q * s)
        + 3 * d * q * q * s
    )
    C = (
        3 * a * p * r * r
        + b * (r * r * q + 2 * p * r * s)
        + c * (p * s * s + 2 * q * r * s)
        + 3 * d * q * s * s
    )
    D = a * r**3 + b * r * r * s + c * r * s * s + d * s**3
    return A, B, C, D


def _p_maximal(a, b, c, d, p) -> bool:
    """Local maximality of the ring of (a, b, c, d) at p.

    Non-maximal iff p divides the whole form, or some projective root of
    f mod p moves to the leading slot with p^2 | a' and p | b'.
    """
    if a % p == 0 and b % p == 0 and c % p == 0 and d % p == 0:
        return False
    roots = [(r, 1) for r in range(p) if (a * r**3 + b * r * r + c * r + d) % p == 0]
    if a % p == 0:
        roots.append((1, 0))
    for (u0, v0) in roots:
        M = ((u0, -1), (v0, 0)) if v0 != 0 else ((1, 0), (0, 1))
        A, B, _, _ = transformed_form(a, b, c, d, M)
        if A % (p * p) == 0 and B % p == 0:
            return False
    return True


def is_maximal(ring: CubicRing) -> bool:
    """Maximality via the local criterion at every p with p^2 | disc."""
    disc = ring.discriminant
    if disc == 0:
        raise NonEtaleInput("non-etale input")
    n = abs(disc)
    p = 2
    while p * p <= n:
        if n % (p * p) == 0 and not _p_maximal(ring.a, ring.b, ring.c, ring.d, p):
            return False
        while n % p == 0:
            n //= p
        p += 1 if p == 2 else 2
    return True


# ---------------------------------------------------------------------------
# Reduction to the shape (t, 0, S/3, 0)

@dataclass(frozen=True)
class CanonicalReduction:
    """Data (t, S, m) with t < 0 < S and, writing m' = Ad(w_alpha)(m),

        w = det(m')^2 rho3(m'^-1) (t, 0, S/3, 0).

    The identity is re-verified through the 7x7 matrix model before the
    object is returned, never trusted from coordinate algebra alone.
    """

    t: Fraction
    S: Fraction
    m: Matrix2

    @property
    def index(self) -> Fraction:
        """-t*S, the index of the half-integral coefficient it selects."""
        return -self.t * self.S

    def m_prime(self) -> Matrix2:
        """GL2 coordinate of Ad(w_alpha)(m), computed in the 7x7 model."""
        from .group import ad_weyl_alpha, levi_m, levi_m_coords

        return levi_m_coords(ad_weyl_alpha(levi_m(self.m)))


def verify_reduction(w, red: CanonicalReduction) -> bool:
    """Exact 7x7 check of w = det(m')^2 rho3(m'^-1) w0, w0 = (t, 0, S/3, 0).

    Conjugation inside the matrix group gives the adjoint W-action; the
    remaining det(m') scalar follows from coad = det * Ad(inverse)."""
    from .group import heis_n1, levi_m, n1_coords

    w = _vec(w)
    b = red.m_prime()
    mp = levi_m(b)
    conj = mp.inverse() * heis_n1(red.t, 0, red.S / 3, 0, 0) * mp
    b1, b2, b3, b4, z = n1_coords(conj)
    dt = b.det()
    return z == 0 and (dt * b1, dt * b2, dt * b3, dt * b4) == tuple(w)


def reduce_to_canonical(w, normalize: bool = True) -> CanonicalReduction:
    """Reduce w (q(w) < 0, some rational projective root) to shape.

    Steps: move a rational root of f_w to kill a4, shear away a2 (the
    cofactor quadratic has nonzero v^2-coefficient whenever q != 0), flip
    u -> -u if needed so that t < 0 < S.  With ``normalize`` (default) a
    vector that was not already in shape is rescaled inside its orbit to
    (t, S) = (-D0, 1), where D0 is the minimal positive integer == 0, 1
    mod 4 in the square class of -t*S; any two vectors of one coadjoint
    orbit then land on literally the same shape vector.  Vectors already
    in shape return the identity reduction untouched.
    """
    from .group import ad_weyl_alpha_inv, coad_w, levi_m, levi_m_coords

    w = _vec(w)
    if quartic_q(w) >= 0:
        raise ValueError("precondition violation: q(w) >= 0")

    if w.a2 == 0 and w.a4 == 0 and w.a1 < 0 and w.a3 > 0:
        red = CanonicalReduction(t=w.a1, S=3 * w.a3, m=mat2(1, 0, 0, 1))
        assert verify_reduction(w, red)
        return red

    steps: list[Matrix2] = []
    cur = tuple(w)

    def apply(A: Matrix2):
        nonlocal cur
        cur = coad_w(A, cur)
        steps.append(A)

    if cur[3] != 0:
        roots = rational_projective_roots(cur)
        if not roots:
            raise CubicFieldOrbitUnsupported("cubic-field orbit unsupported")
        u0, v0 = roots[0]
        # coad substitutes through the inverse; want that inverse to carry
        # the root into the v^3 slot
        a_inv = mat2(v0, u0, 1, 0) if u0 != 0 else mat2(v0, u0, 0, 1)
        apply(a_inv.inverse())
    if cur[1] != 0:
        if cur[2] == 0:
            raise NonEtaleInput("degenerate cofactor quadratic")
        shear_inv = mat2(1, 0, -cur[1] / (2 * cur[2]), 1)
        apply(shear_inv.inverse())
    if cur[0] > 0:
        apply(mat2(1, 0, 0, -1))
    assert cur[1] == cur[3] == 0 and cur[0] < 0 < cur[2]

    if normalize:
        d0, lam = fundamental_discriminant_of_class(-3 * cur[0] * cur[2])
        apply(mat2(lam, 0, 0, lam))
        s_now = 3 * cur[2]
        apply(mat2(1, 0, 0, 1 / s_now))
        assert -cur[0] == d0 and 3 * cur[2] == 1

    total = mat2(1, 0, 0, 1)
    for A in steps:
        total = total * A
    m_prime = total.inverse()
    m_mat = levi_m_coords(ad_weyl_alpha_inv(levi_m(m_prime)))
    red = CanonicalReduction(t=cur[0], S=3 * cur[2], m=m_mat)
    if not verify_reduction(w, red):
        raise AssertionError("reduction failed its 7x7 verification")
    return red


def reduction_json(w) -> dict:
    """CLI-facing record for a reduced vector."""
    w = _vec(w)
    red = reduce_to_canonical(w)
    return {
        "w": [str(x) for x in w],
        "q": str(quartic_q(w)),
        "etale": str(etale_type(w)),
        "t": str(red.t),
        "S": str(red.S),
        "m": [[str(red.m[0, 0]), str(red.m[0, 1])], [str(red.m[1, 0]), str(red.m[1, 1])]],
    }
