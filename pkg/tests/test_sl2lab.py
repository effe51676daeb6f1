"""Deformed rank 1 laboratory: the two canonical maps and their checks."""

from fractions import Fraction

import pytest

from vermatwist import (
    DUAL_TO_VERMA,
    VERMA_TO_DUAL,
    TruncationTooSmall,
    WeightMap,
    check_equivariance,
    coker_check_over_A,
    deformed_binomial,
    four_term_rank_check,
    is_natural,
    jantzen_layers_sl2,
    one,
    phi,
    psi,
    variable,
)

SAMPLE_WEIGHTS = [
    Fraction(-3),
    Fraction(-1),
    Fraction(0),
    Fraction(1),
    Fraction(2),
    Fraction(5),
    Fraction(-7, 2),
    Fraction(1, 3),
]


def test_is_natural():
    assert is_natural(0)
    assert is_natural(7)
    assert not is_natural(-1)
    assert not is_natural(Fraction(1, 2))


def test_deformed_binomial_values():
    b = deformed_binomial(3, 2)
    assert b.specialize() == 3
    assert deformed_binomial(4, 0).specialize() == 1
    # binomial(1 + X, 3) = (1+X) X (X-1) / 6 vanishes once at X = 0
    assert deformed_binomial(1, 3).valuation() == 1
    assert deformed_binomial(Fraction(-7, 2), 5).valuation() == 0


def test_phi_specializes_to_classical_binomials():
    p = phi(3, 10)
    import math

    assert p.specialized() == tuple(
        Fraction(math.comb(3, i)) if i <= 3 else Fraction(0) for i in range(11)
    )


def test_psi_specializes_to_classical_inverse():
    # frozen classical values for lam = 1: zero through index lam, then
    # (-1)^i * binomial(i, i - lam - 1) afterwards
    q = psi(1, 8)
    assert q.specialized() == (
        Fraction(0),
        Fraction(0),
        Fraction(1),
        Fraction(-3),
        Fraction(6),
        Fraction(-10),
        Fraction(15),
        Fraction(-21),
        Fraction(28),
    )


def test_equivariance_of_both_maps():
    for lam in SAMPLE_WEIGHTS:
        assert check_equivariance(phi(lam, 9)), lam
        assert check_equivariance(psi(lam, 9)), lam


def test_all_ones_map_is_not_equivariant():
    ones = WeightMap(Fraction(1), 8, DUAL_TO_VERMA, tuple(one() for _ in range(9)))
    assert check_equivariance(ones) is False


def test_weight_map_validation():
    with pytest.raises(ValueError):
        WeightMap(Fraction(0), 3, "sideways", (one(),) * 4)
    with pytest.raises(ValueError):
        WeightMap(Fraction(0), 3, VERMA_TO_DUAL, (one(),) * 3)


def test_psi_phi_is_identity_off_the_natural_locus():
    for lam in (Fraction(-7, 2), Fraction(1, 3), Fraction(-1), Fraction(-4)):
        p = phi(lam, 6)
        q = psi(lam, 6)
        for a, b in zip(p.entries, q.entries):
            assert (a * b) == one()


def test_valuation_complementarity():
    # val(phi_i) + val(psi_i) is 1 on the natural locus and 0 off it
    for lam in SAMPLE_WEIGHTS:
        p = phi(lam, 8)
        q = psi(lam, 8)
        expected = 1 if is_natural(lam) else 0
        for vp, vq in zip(p.valuations(), q.valuations()):
            assert vp + vq == expected, lam


def test_phi_valuation_pattern_on_natural_weights():
    for lam in (0, 1, 2, 3):
        vals = phi(lam, 10).valuations()
        assert vals == tuple(1 if i >= lam + 1 else 0 for i in range(11)), lam


def test_jantzen_layers_examples():
    assert jantzen_layers_sl2(3, 12) == {i: (1 if i >= 4 else 0) for i in range(13)}
    assert jantzen_layers_sl2(0, 6) == {i: (1 if i >= 1 else 0) for i in range(7)}
    assert jantzen_layers_sl2(-3, 6) == {i: 0 for i in range(7)}
    assert jantzen_layers_sl2(Fraction(-7, 2), 4) == {i: 0 for i in range(5)}


def test_four_term_rank_check():
    for lam in (0, 1, 2, 3):
        assert four_term_rank_check(lam, 12)
    with pytest.raises(ValueError):
        four_term_rank_check(-2, 12)
    with pytest.raises(ValueError):
        four_term_rank_check(Fraction(1, 2), 12)
    with pytest.raises(TruncationTooSmall):
        four_term_rank_check(3, 9)  # needs at least 2*3 + 4 = 10
    assert four_term_rank_check(3, 10)


def test_coker_check_over_A():
    for lam in (0, 1, 2, 3):
        assert coker_check_over_A(lam, 12)
    # off the natural locus the cokernel condition is vacuous but the
    # bookkeeping must still succeed
    assert coker_check_over_A(Fraction(-7, 2), 8)
    assert coker_check_over_A(-3, 8)


def test_truncated_window_equivariance():
    # restricting the checked window must not change the answer on maps
    # that are equivariant everywhere
    p = phi(2, 10)
    assert check_equivariance(p, truncation=5)
