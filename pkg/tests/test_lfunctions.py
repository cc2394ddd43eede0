import cmath
import math
from fractions import Fraction as F

import mpmath
import pytest

from g2lift.lfunctions import (
    LaurentPoly,
    SeriesInstability,
    central_twisted_value,
    cesaro_direct_value,
    factorization_check,
    gamma_inc_ratio,
    invert_alpha_tpoly,
    kronecker_chi,
    shifted_pair_factor,
    solve_root_number,
    specialize_alpha,
    std7_euler_factor,
    std7_numeric_check,
    sym2_factor,
)
from g2lift.lfunctions import _poly_mul
from g2lift.modforms import delta

from oracles import kronecker_oracle


def test_kronecker_matches_oracle():
    for D in (1, 5, 8, 12, 13, 17, 21, 24, 28, 29, 33, 37, 40):
        for n in range(0, 120):
            assert kronecker_chi(D, n) == kronecker_oracle(D, n)


def test_kronecker_specific():
    assert kronecker_chi(5, 2) == -1
    assert kronecker_chi(1, 9) == 1
    assert all(kronecker_chi(8, n) == 0 for n in range(0, 40, 2))


def test_kronecker_rejects_nonfundamental():
    with pytest.raises(ValueError):
        kronecker_chi(20, 3)
    with pytest.raises(ValueError):
        kronecker_chi(-3, 2)


def test_gamma_inc_ratio_matches_mpmath():
    for k in (2, 6, 10):
        for x in (0.1, 1.0, 7.5, 33.0, 80.0):
            want = float(mpmath.gammainc(k, x, regularized=True))
            assert abs(gamma_inc_ratio(k, x) - want) <= 1e-14 * max(1, want)


def test_central_value_delta():
    d = delta(2500)
    val = central_twisted_value(d, 1, 1e-10)
    assert val.abs_error_bound < 1e-10
    assert abs(val.value - 0.7921228386460305) < 1e-10
    assert val.value != 0


def test_central_value_twists_stable():
    d = delta(2500)
    for D in (5, 8, 13):
        val = central_twisted_value(d, D, 1e-10)
        assert val.abs_error_bound < 1e-10
        assert abs(val.value) > 0.01


def test_central_value_agrees_with_mpmath_reference():
    # high-precision recomputation of the same smoothed series
    d = delta(2500)
    got = central_twisted_value(d, 5, 1e-10).value
    ref = central_twisted_value(d, 5, 1e-10, ext_float=True).value
    assert abs(got - ref) < 1e-11


def test_central_value_guards():
    d = delta(2500)
    with pytest.raises(ValueError):
        central_twisted_value(d, 1, 1e-14)  # tol below float support
    with pytest.raises(ValueError):
        central_twisted_value(d, 20, 1e-8)  # not fundamental
    with pytest.raises(ValueError):
        central_twisted_value(delta(30), 1, 1e-10)  # too few coefficients


def test_root_number_solves_to_one():
    d = delta(2500)
    for D in (1, 5, 17):
        assert abs(solve_root_number(d, D) - 1) < 1e-6


def test_cesaro_oracle_cross_check(delta_full):
    # independent direct-summation oracle at loose tolerances
    smoothed = central_twisted_value(delta_full, 1, 1e-10).value
    direct = cesaro_direct_value(delta_full, 1, 2400)
    assert abs(smoothed - direct) < 10 * 1e-3
    smoothed5 = central_twisted_value(delta_full, 5, 1e-10).value
    direct5 = cesaro_direct_value(delta_full, 5, 4900)
    assert abs(smoothed5 - direct5) < 10 * 5e-3


# --- formal Euler algebra -----------------------------------------------------

def test_factorization_formal_identity():
    assert factorization_check()


def test_std7_shape():
    p7 = std7_euler_factor()
    assert len(p7) == 8
    assert p7[0] == LaurentPoly.const(1)
    # alpha -> 1/alpha leaves the polynomial unchanged
    assert invert_alpha_tpoly(p7) == p7


def test_std7_t1_coefficient():
    t1 = std7_euler_factor()[1]
    want = -(
        LaurentPoly.const(1)
        + LaurentPoly.unit(2, 0)
        + LaurentPoly.unit(-2, 0)
        + (LaurentPoly.unit(1, 0) + LaurentPoly.unit(-1, 0))
        * (LaurentPoly.unit(0, 1) + LaurentPoly.unit(0, -1))
    )
    assert t1 == want


def test_std7_alpha_one_specialization():
    one = LaurentPoly.const(1)
    expect = [one]
    for root in (one, one, one, LaurentPoly.unit(0, 1), LaurentPoly.unit(0, 1),
                 LaurentPoly.unit(0, -1), LaurentPoly.unit(0, -1)):
        expect = _poly_mul(expect, [one, -root])
    assert specialize_alpha(std7_euler_factor(), 1) == expect


def test_factorization_numeric_spot_checks(rng):
    for _ in range(20):
        alpha = cmath.exp(1j * rng.uniform(0, 2 * math.pi))
        p = rng.choice([2, 3, 5, 7, 11, 13])
        T = complex(rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4))
        assert std7_numeric_check(alpha, p, T, tol=1e-14)


def test_sym2_times_shifts_is_std7_numerically():
    alpha = cmath.exp(0.77j)
    rp = math.sqrt(7)
    T = 0.21 - 0.05j
    full = _poly_mul(_poly_mul(sym2_factor(), shifted_pair_factor(1)), shifted_pair_factor(-1))
    lhs = sum(c.substitute(alpha, rp) * T**i for i, c in enumerate(full))
    rhs = sum(c.substitute(alpha, rp) * T**i for i, c in enumerate(std7_euler_factor()))
    assert abs(lhs - rhs) < 1e-14


def test_laurent_poly_algebra():
    a = LaurentPoly.unit(1, 0)
    b = LaurentPoly.unit(-1, 0)
    assert a * b == LaurentPoly.const(1)
    assert (a + b).invert_alpha() == a + b
    assert (a - a) == LaurentPoly()
    assert LaurentPoly({(0, 0): F(0)}) == LaurentPoly()


# --- Kohnen-Zagier proportionality ---------------------------------------------

def test_kz_ratio_constant(delta_full, plus6_full):
    k = 6
    ratios = []
    for D in (5, 8, 12, 13, 17, 21, 24):
        cD = plus6_full.coeff(D)
        if cD == 0:
            continue
        L = central_twisted_value(delta_full, D, 1e-10)
        ratios.append(float(cD * cD) / (D ** (k - 0.5) * L.value))
    assert len(ratios) >= 6
    spread = (max(ratios) - min(ratios)) / abs(min(ratios))
    assert spread < 1e-5


def test_series_instability_detected():
    """A corrupted tail coefficient breaks the two-cutoff agreement."""
    from g2lift.modforms import QExpansion

    d = delta(2500)
    coeffs = list(d.coeffs)
    coeffs[10] += 10**30  # spike weighted differently by each cutoff
    fake = QExpansion(d.weight, 1, tuple(coeffs))
    with pytest.raises(SeriesInstability):
        central_twisted_value(fake, 1, 1e-10)


def test_factorization_numeric_specific_point():
    # alpha = i, p = 2, T = 1/3
    assert std7_numeric_check(1j, 2, 1 / 3, tol=1e-14)
