"""Independent reference implementations used as test oracles.

Everything here deliberately avoids the code paths it checks: symbolic
substitution instead of coefficient formulas, cofactor expansion instead
of Bareiss, superring enumeration instead of local criteria, character
arithmetic instead of the closed plethysm formula.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product


# --- polynomial substitution oracle for the symmetric-cube action ----------

def poly_from_vec(w):
    """Dense coefficient list [u^3, u^2 v, u v^2, v^3] of f_w."""
    a1, a2, a3, a4 = (Fraction(x) for x in w)
    return [a1, 3 * a2, 3 * a3, a4]


def vec_from_poly(p):
    return (p[0], p[1] / 3, p[2] / 3, p[3])


def substitute(poly, m11, m12, m21, m22):
    """Coefficients of f(m11 u + m12 v, m21 u + m22 v) by brute expansion."""
    out = [Fraction(0)] * 4
    # f = sum_i poly[i] u^(3-i) v^i; substitute and expand binomially
    for i in range(4):
        if poly[i] == 0:
            continue
        # (m11 u + m12 v)^(3-i) * (m21 u + m22 v)^i
        terms = {0: Fraction(1)}
        for _ in range(3 - i):
            new = {}
            for deg, c in terms.items():
                new[deg] = new.get(deg, Fraction(0)) + c * m11
                new[deg + 1] = new.get(deg + 1, Fraction(0)) + c * m12
            terms = new
        for _ in range(i):
            new = {}
            for deg, c in terms.items():
                new[deg] = new.get(deg, Fraction(0)) + c * m21
                new[deg + 1] = new.get(deg + 1, Fraction(0)) + c * m22
            terms = new
        for deg, c in terms.items():
            out[deg] += poly[i] * c
    return out


def rho3_oracle(A, w):
    """The substitution f |-> f(d u + b v, c u + a v), read back as a vector."""
    a, b, c, d = A.entries()
    return vec_from_poly(substitute(poly_from_vec(w), d, b, c, a))


# --- determinant oracle -----------------------------------------------------

def det_cofactor(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    out = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        out += (-1) ** j * rows[0][j] * det_cofactor(minor)
    return out


# --- divisor sums ------------------------------------------------------------

def sigma(k, n):
    return sum(d**k for d in range(1, n + 1) if n % d == 0)


# --- binary cubic discriminant via the resultant -----------------------------

def disc_resultant(a, b, c, d):
    """disc(f) = -Res(f, f')/a for f = a x^3 + b x^2 + c x + d (a != 0)."""
    # Sylvester matrix of (deg 3, deg 2): 5x5
    rows = [
        [a, b, c, d, 0],
        [0, a, b, c, d],
        [3 * a, 2 * b, c, 0, 0],
        [0, 3 * a, 2 * b, c, 0],
        [0, 0, 3 * a, 2 * b, c],
    ]
    res = det_cofactor([[Fraction(x) for x in r] for r in rows])
    return -res / a


# --- brute-force maximality oracle -------------------------------------------

def _subspaces(p):
    """All nonzero subspaces of F_p^3 as lists of basis vectors.

    Lines through normalized vectors, planes as kernels of normalized
    functionals, plus the full space.
    """
    lines = []
    seen = set()
    for v in product(range(p), repeat=3):
        if v == (0, 0, 0):
            continue
        lead = next(x for x in v if x % p)
        inv = pow(lead, -1, p)
        key = tuple(x * inv % p for x in v)
        if key not in seen:
            seen.add(key)
            lines.append([key])
    planes = []
    for a in (key for key in seen):
        basis = []
        for v in product(range(p), repeat=3):
            if v == (0, 0, 0):
                continue
            if sum(ai * vi for ai, vi in zip(a, v)) % p == 0:
                # keep if independent of current basis
                if not _in_span(basis, v, p):
                    basis.append(v)
            if len(basis) == 2:
                break
        planes.append(basis)
    full = [[(1, 0, 0), (0, 1, 0), (0, 0, 1)]]
    return lines + planes + full


def _in_span(basis, v, p):
    """Membership of v in the span of basis vectors over F_p."""
    rows = [list(b) for b in basis] + [list(v)]
    r = 0
    for c in range(3):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        r += 1
    rank_with = r
    return rank_with == len(_rref(basis, p))


def _rref(vectors, p):
    rows = [list(v) for v in vectors]
    r = 0
    for c in range(3):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        r += 1
    return [tuple(row) for row in rows[:r] if any(row)]


def superring_exists(ring, p) -> bool:
    """Is there an order R < L <= (1/p) R inside R tensor Q?

    Lattices R <= L <= (1/p) R correspond to subspaces V of (Z/p)^3 via
    L = R + span{v/p : v in V}.  Completeness: the multiplier ring of the
    p-radical of a non-p-maximal order strictly contains it and lies in
    (1/p) R, so some subspace witnesses non-maximality.
    """
    for basis in _subspaces(p):
        span = _rref(basis, p)

        def in_lattice(x):
            px = [p * t for t in x]
            if any(t.denominator != 1 for t in px):
                return False
            return _in_span(span, tuple(int(t) % p for t in px), p)

        gens = [[Fraction(x, p) for x in v] for v in span]
        prods = []
        for i, v in enumerate(gens):
            for w in gens[i:]:
                prods.append(ring.multiply(v, w))
            for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
                prods.append(ring.multiply(v, [Fraction(x) for x in e]))
        if all(in_lattice(x) for x in prods):
            return True
    return False


def maximal_bruteforce(ring) -> bool:
    disc = ring.discriminant
    n = abs(disc)
    p = 2
    while p * p <= n:
        if n % (p * p) == 0 and superring_exists(ring, p):
            return False
        while n % p == 0:
            n //= p
        p += 1 if p == 2 else 2
    return True


# --- Kronecker symbol oracle --------------------------------------------------

def legendre(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def kronecker_oracle(D, n):
    """Multiplicative build-up from Legendre symbols and the (D/2) rule."""
    if n == 0:
        return 1 if D in (1, -1) else 0
    out = 1
    if n < 0:
        n = -n
        if D < 0:
            out = -out
    m = n
    p = 2
    while m > 1:
        while m % p == 0:
            m //= p
            if p == 2:
                out *= 0 if D % 2 == 0 else (1 if D % 8 in (1, 7) else -1)
            else:
                out *= legendre(D, p)
        p += 1
    return out


# --- SU(2) character plethysm oracle ------------------------------------------

def _ladd(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
        if out[k] == 0:
            del out[k]
    return out


def _lmul(a, b):
    out = {}
    for k1, v1 in a.items():
        for k2, v2 in b.items():
            out[k1 + k2] = out.get(k1 + k2, 0) + v1 * v2
    return {k: v for k, v in out.items() if v}


def sym_power_character(n):
    """h_n of the eigenvalue multiset {x^3, x, x^-1, x^-3} by Newton's
    identities: n h_n = sum_{i<=n} h_{n-i} p_i, exact Laurent arithmetic."""
    hs = [{0: Fraction(1)}]
    for m in range(1, n + 1):
        acc = {}
        for i in range(1, m + 1):
            p_i = {3 * i: Fraction(1), i: Fraction(1), -i: Fraction(1), -3 * i: Fraction(1)}
            acc = _ladd(acc, _lmul(hs[m - i], p_i))
        hs.append({k: v / m for k, v in acc.items() if v})
    out = {}
    for k, v in hs[n].items():
        assert v.denominator == 1
        if v:
            out[k] = int(v)
    return out


def decompose_su2(character):
    """Peel highest weights: returns {j: multiplicity}."""
    ch = dict(character)
    out = {}
    while ch:
        j = max(ch)
        mult = ch[j]
        assert mult > 0, "not a nonnegative character"
        out[j] = mult
        for w in range(-j, j + 1, 2):
            ch[w] = ch.get(w, 0) - mult
            if ch[w] == 0:
                del ch[w]
    return out


def plethysm_oracle(n):
    return decompose_su2(sym_power_character(n))
