import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from unitfield.errors import DegenerateError, NotRationalError
from unitfield.moduli import (
    INF,
    STABILIZER,
    ConicTwoLines,
    apply_perm,
    class_equal,
    coeff_to_moduli,
    coeff_to_moduli_closed_form,
    config_from_coeff,
    conic_parametrization,
    cross_ratio,
    fourple,
    intersection_fourple,
    is_normal_crossing,
    lambda_prime,
    lambda_prime_of_beta,
    moduli_record,
    stabilizer_orbit,
)

rats = st.fractions(min_value=-20, max_value=20, max_denominator=9)


def test_cross_ratio_examples():
    assert cross_ratio(fourple(0, 1, 2, 3)) == Fraction(4, 3)
    c = Fraction(5, 7)
    assert cross_ratio(fourple(0, INF, 1, c)) == 1 / c
    x = Fraction(3)
    assert cross_ratio(fourple(1, -1, x, INF)) == (1 - x) / (-1 - x)
    with pytest.raises(DegenerateError):
        cross_ratio(fourple(0, 1, 1, 2))


@given(st.lists(rats, min_size=4, max_size=4, unique=True))
def test_swap_inverts(pts):
    f = fourple(pts)
    g = apply_perm((1, 0, 2, 3), f)
    assert cross_ratio(g) == 1 / cross_ratio(f)


def test_lambda_prime_examples():
    assert lambda_prime_of_beta(-1) == -4
    assert lambda_prime_of_beta(2) == Fraction(1, 2)
    assert lambda_prime_of_beta(1) == 0
    assert lambda_prime_of_beta(0) is INF
    assert lambda_prime_of_beta(INF) is INF


def test_class_equal_examples():
    assert class_equal((1, 2, 3, 4), (2, 1, 3, 4))
    assert class_equal((1, 2, 3, 4), (3, 4, 1, 2))
    assert not class_equal((1, 2, 3, 4), (1, 3, 2, 4))


def test_stabilizer():
    assert len(STABILIZER) == 8
    f = fourple(0, INF, 1, 2)
    orbit = stabilizer_orbit(f)
    assert len(set(orbit)) == 8
    assert all(class_equal(g, f) for g in orbit)
    assert len({lambda_prime(g) for g in orbit}) == 1
    assert not class_equal(apply_perm((2, 1, 0, 3), f), f)


def test_lambda_prime_invariant_on_random_fourples():
    rng = random.Random(11)
    for _ in range(200):
        pts = set()
        while len(pts) < 4:
            pts.add(Fraction(rng.randint(-30, 30), rng.randint(1, 9)))
        f = fourple(list(pts))
        lp = lambda_prime(f)
        assert all(lambda_prime(apply_perm(g, f)) == lp for g in STABILIZER)


@given(st.lists(rats, min_size=4, max_size=4, unique=True), st.permutations(range(4)))
def test_same_class_iff_same_lambda_prime(pts, perm):
    f = fourple(pts)
    g = apply_perm(perm, f)
    if class_equal(f, g):
        assert lambda_prime(f) == lambda_prime(g)
    # the other direction: equal beta-multisets force equal lambda'
    if {cross_ratio(f), 1 / cross_ratio(f)} == {cross_ratio(g), 1 / cross_ratio(g)}:
        assert lambda_prime(f) == lambda_prime(g)


def test_config_from_coeff_matrices():
    c = config_from_coeff(0)
    assert c.conic == ((1, 0, 0), (0, -1, 0), (0, 0, 1))
    c = config_from_coeff(3)
    assert c.conic[0][2] == c.conic[2][0] == Fraction(3, 2)
    for lam in (2, -2):
        assert config_from_coeff(lam).determinant == 0
    lam = Fraction(5, 3)
    assert config_from_coeff(lam).determinant == -(1 - lam * lam / 4)


def test_intersection_fourple_examples():
    f = intersection_fourple(config_from_coeff(6))
    assert [p.value() for p in f] == [3, INF, 1, -1]
    with pytest.raises(DegenerateError):
        intersection_fourple(config_from_coeff(2))
    # both lines pass through (1 : 1 : 0), which lies on the conic
    conic = ((1, 0, 0), (0, -1, 0), (0, 0, 1))
    c = ConicTwoLines(conic, (1, -1, 0), (1, -1, 1))
    with pytest.raises(DegenerateError):
        intersection_fourple(c)
    assert not is_normal_crossing(c)


def test_irrational_intersections():
    # y = 3z meets y^2 = x^2 + z^2 where x^2 = 8z^2
    conic = ((1, 0, 0), (0, -1, 0), (0, 0, 1))
    c = ConicTwoLines(conic, (0, 0, 1), (0, 1, -3), None)
    with pytest.raises(NotRationalError):
        intersection_fourple(c)
    assert is_normal_crossing(c)


def test_coeff_to_moduli_examples():
    assert coeff_to_moduli(6) == Fraction(1, 2)
    assert coeff_to_moduli(0) == -4
    with pytest.raises(DegenerateError):
        coeff_to_moduli(2)


def test_closed_form_on_random_coefficients():
    rng = random.Random(3)
    for _ in range(100):
        lam = Fraction(rng.randint(-40, 40), rng.randint(1, 12))
        if lam * lam == 4:
            continue
        assert coeff_to_moduli(lam) == coeff_to_moduli_closed_form(lam) == 16 / (lam * lam - 4)
        assert coeff_to_moduli(-lam) == coeff_to_moduli(lam)


def test_parametrization_independent():
    # a parametrization found by projection from a different rational point
    for lam in (Fraction(0), Fraction(6), Fraction(-7, 3), Fraction(10)):
        base = config_from_coeff(lam)
        other = ConicTwoLines(base.conic, base.line2, base.line3,
                              conic_parametrization(base.conic, (1, 1, 0)))
        assert lambda_prime(intersection_fourple(other)) == coeff_to_moduli(lam)


@given(rats)
def test_normal_crossing_iff_not_pm2(lam):
    assert is_normal_crossing(config_from_coeff(lam)) == (lam not in (2, -2))


def test_moduli_record():
    rec = moduli_record(Fraction(6))
    assert rec["fourple"] == ["3", "inf", "1", "-1"]
    assert rec["beta"] == "1/2" and rec["lambda_prime"] == "1/2"
    assert rec["normal_crossing"] is True
    rec = moduli_record(Fraction(2))
    assert rec["normal_crossing"] is False and rec["lambda_prime"] is None
