from math import comb

import pytest

from g2lift.ktypes import decomposition_dimension, ktype_dimension, plethysm_symn_sym3

from oracles import plethysm_oracle


def test_small_cases():
    assert plethysm_symn_sym3(0) == {0: 1}
    assert plethysm_symn_sym3(1) == {3: 1}
    assert plethysm_symn_sym3(2) == {6: 1, 2: 1}
    assert plethysm_symn_sym3(3) == {9: 1, 5: 1, 3: 1}


def test_floor_convention():
    # the i = 0 multiplicity needs floor(-1/3) = -1
    assert (0 - 1) // 3 == -1
    assert plethysm_symn_sym3(1)[3] == 1


def test_matches_character_oracle_to_30():
    for n in range(31):
        assert plethysm_symn_sym3(n) == plethysm_oracle(n), n


def test_dimension_conservation():
    for n in range(31):
        assert decomposition_dimension(plethysm_symn_sym3(n)) == comb(n + 3, 3)


def test_multiplicities_nonnegative():
    for n in range(31):
        assert all(m > 0 for m in plethysm_symn_sym3(n).values())


def test_ktype_dimension():
    assert ktype_dimension(6, 0) == 13
    assert ktype_dimension(6, 2) == 150
    for k in (2, 6, 9):
        assert ktype_dimension(k, 0) == 2 * k + 1
    with pytest.raises(ValueError):
        ktype_dimension(1, 0)
    with pytest.raises(ValueError):
        plethysm_symn_sym3(-1)
