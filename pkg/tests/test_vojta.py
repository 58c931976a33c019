import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from unitfield.errors import DegenerateError, DomainError, InvalidInstanceError, VanishingSubsumError
from unitfield.funfield import (
    INFINITY,
    Place,
    RatFunc,
    SSet,
    d_omega,
    divisor,
    height,
    proj_height,
    theta,
    valuation,
)
from unitfield.harness.generators import rand_identity_instance, rand_solution, rand_strict_instance
from unitfield.poly import Poly, irreducible_factors
from unitfield.serialize import parse_expr
from unitfield.vojta import (
    UnitEquationInstance,
    b_identity_holds,
    classify,
    compare_quadratics,
    cover_bound_check,
    cz_check,
    degree_bound,
    discriminant_bounds,
    divisibility_check,
    forced_u1,
    gcd_sum,
    height_bound,
    lemma_ab_chain,
    poly_A_value,
    poly_B,
    printed_F,
    resultant_F,
    resultant_G,
    subsum_cases,
    sylvester_F,
    sylvester_G,
    validate,
    zannier_check,
)

t = RatFunc.t()
ONE = RatFunc.const(1)
S_PM2 = SSet.from_points([0, 2, -2])


def known(**kw):
    args = dict(S=S_PM2, lam=t, u1=t, u2=-2 * t**2, y=ONE)
    args.update(kw)
    return UnitEquationInstance(**args)


# -- validation


def test_validate_known_solution():
    assert validate(known()).y == 1


@pytest.mark.parametrize(
    "kw, code",
    [
        (dict(u2=-2 * t**3), "equation-mismatch"),
        (dict(lam=RatFunc.const(5)), "constant-lambda"),
        (dict(u1=t + 5), "non-unit-u1"),
        (dict(u2=t + 5), "non-unit-u2"),
        (dict(u1=RatFunc()), "zero-u1"),
        (dict(lam=t - 3), "lambda-support"),
        (dict(y=None), "missing-y"),
        (dict(y=1 / (t - 7)), "y-not-integer"),
    ],
)
def test_validate_codes(kw, code):
    with pytest.raises(InvalidInstanceError) as err:
        validate(known(**kw))
    assert err.value.code == code


def test_strict_support():
    S = SSet.from_points([0])
    inst = UnitEquationInstance(S, t, t, -2 * t**2, ONE)
    with pytest.raises(InvalidInstanceError) as err:
        validate(inst)
    assert err.value.code == "strict-support"
    validate(UnitEquationInstance(S, t, t, -2 * t**2, ONE, strict=False))


def test_from_units_rejects():
    with pytest.raises(InvalidInstanceError) as err:
        UnitEquationInstance.from_units(S_PM2, t, t, t)
    assert err.value.code == "not-a-square"
    # 1 - t + (t - 2) + 1 = 0
    with pytest.raises(InvalidInstanceError) as err:
        UnitEquationInstance.from_units(S_PM2, t, -ONE, t - 2)
    assert err.value.code == "zero-rhs"


# -- A, B, F, G


def test_B_on_known_solution():
    inst = known(S=S_PM2.with_designated([Place.at(2), Place.at(-2)]))
    B = poly_B(inst)
    assert B(inst.u1, inst.u2) == 0 == d_omega(inst.y * inst.y, inst.S)


def test_B_with_constant_units():
    S = SSet.from_points([0, 1])
    inst = UnitEquationInstance(S, t, RatFunc.const(3), RatFunc.const(-2), strict=False)
    B = poly_B(inst)
    assert B(inst.u1, inst.u2) == d_omega(t, S) * 3
    assert b_identity_holds(inst)


def test_identities_on_random_instances():
    rng = random.Random(5)
    for _ in range(60):
        inst = rand_identity_instance(rng)
        assert b_identity_holds(inst)
        assert compare_quadratics(sylvester_F(inst), resultant_F(inst)) in ("equal", "negated")
        assert compare_quadratics(sylvester_F(inst), printed_F(inst)) in ("equal", "negated")
        assert sylvester_G(inst) == resultant_G(inst)
        # A(u1, u2) and its derivative, computed without B
        assert d_omega(poly_A_value(inst), inst.S) == poly_B(inst)(inst.u1, inst.u2)


def test_F_special_coefficients():
    S = SSet.from_points([0, 1])
    u = t**2 / (t - 1)
    inst = UnitEquationInstance(S, t, u, u, strict=False)
    assert resultant_F(inst).c2 in (theta(u, S), -theta(u, S))
    inst = UnitEquationInstance(S, t, u, RatFunc.const(4), strict=False)
    assert resultant_F(inst).c0 == 0


def test_discriminant_relation():
    rng = random.Random(9)
    for _ in range(40):
        inst = rand_identity_instance(rng)
        F, G = resultant_F(inst), resultant_G(inst)
        k = inst.lam * inst.th1 - inst.lam_prime
        assert G.discriminant() == k * k * F.discriminant()


def test_weights_under_redesignation():
    rng = random.Random(2)
    for _ in range(20):
        inst = rand_strict_instance(rng)
        fin = inst.S.finite
        if len(fin) < 3:
            continue
        other = inst.with_designated([fin[-1], fin[-2]])
        r = RatFunc.from_poly(other.S.m) / RatFunc.from_poly(inst.S.m)
        F, F2 = resultant_F(inst), resultant_F(other)
        G, G2 = resultant_G(inst), resultant_G(other)
        assert F2 == F.scaled(r)
        assert G2 == G.scaled(r * r)


# -- discriminant heights


def test_discriminant_bounds_known():
    rep = discriminant_bounds(known())
    assert rep.bound_F == 16 and rep.bound_G == 28
    assert rep.ok_F and rep.ok_G
    assert any(f.startswith("typo") for f in rep.findings)


# -- divisibility


def test_divisibility_known_and_random():
    assert divisibility_check(known()).ok
    rng = random.Random(4)
    for _ in range(30):
        inst = rand_solution(rng)
        assert divisibility_check(inst).ok


def test_divisibility_nonconstant_y():
    rng = random.Random(8)
    seen = 0
    while seen < 10:
        inst = rand_solution(rng)
        if inst.y.is_constant():
            continue
        seen += 1
        fu, gu = resultant_F(inst)(inst.u1), resultant_G(inst)(inst.u2)
        for q, _ in irreducible_factors(inst.y.num):
            v = Place(q)
            if v in inst.S:
                continue
            for val in (fu, gu):
                if val:
                    assert valuation(val, v) >= valuation(inst.y, v)


# -- gcd sums and the two inequalities


def test_gcd_sum_examples():
    S0 = SSet.from_points([0])
    assert gcd_sum(t, t**2, S0) == 1
    assert gcd_sum(2 * t, 3 * t, S0) == 0
    assert gcd_sum(t, RatFunc.const(5), S0) == 0
    with pytest.raises(DegenerateError):
        gcd_sum(ONE, t, S0)


@given(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4),
       st.sampled_from([1, -1, 2, Fraction(1, 2), 3]), st.sampled_from([1, -1, 2, Fraction(-1, 3)]))
def test_gcd_sum_symmetric_and_bounded(a0, a1, b0, b1, c, d):
    S = SSet.from_points([0, 1])
    a = t**a0 * (t - 1) ** a1 * c
    b = t**b0 * (t - 1) ** b1 * d
    if a == 1 or b == 1:
        return
    g = gcd_sum(a, b, S)
    assert g == gcd_sum(b, a, S)
    assert g <= min(height(1 - a), height(1 - b))


def test_cz_examples():
    S0 = SSet.from_points([0])
    rep = cz_check(t, t**2, S0)
    assert rep.branch == "dependent-mu-1" and rep.gcd_sum == 1 and rep.holds
    rep = cz_check(t, t - 1, SSet.from_points([0, 1]))
    assert rep.branch == "independent" and rep.holds
    # 3 * cbrt(2) * (H^2 chi)^(1/3), cubed
    assert rep.gcd_sum**3 <= 54 * max(rep.h_a, rep.h_b) ** 2 * rep.chi
    rep = cz_check(2 * t, t**2, S0)
    assert rep.branch == "dependent-mu-ne-1" and rep.gcd_sum == 0 and rep.holds


def test_zannier_examples():
    S0 = SSet.from_points([0])
    rep = zannier_check([t, ONE], S0)
    assert rep.lhs == rep.rhs == 1 and rep.holds
    rep = zannier_check([t**2, t, ONE], S0)
    assert rep.lhs == rep.rhs == 2
    with pytest.raises(VanishingSubsumError) as err:
        zannier_check([t, -t, ONE], S0)
    assert err.value.subset == (0, 1)


def test_zannier_against_direct_sum():
    S = SSet.from_points([0, 1, -1])
    rng = random.Random(1)
    done = 0
    while done < 40:
        m = rng.choice((2, 3, 4))
        thetas = [RatFunc.const(rng.choice((1, -1, 2, 3))) * t ** rng.randint(-2, 2)
                  * (t - 1) ** rng.randint(-2, 2) for _ in range(m)]
        try:
            rep = zannier_check(thetas, S)
        except VanishingSubsumError:
            continue
        done += 1
        total = sum(thetas[1:], thetas[0])
        lhs = sum(v.degree * e for v, e in divisor(total).items() if v not in S and e > 0)
        assert rep.lhs == lhs
        assert rep.proj_height == proj_height(thetas)
        assert rep.holds


# -- classification


def test_subsum_cases():
    assert subsum_cases(known()) == ("u1^2", "lam*u1", "u2")
    inst = validate(UnitEquationInstance(S_PM2, t, t, -ONE, t, Fraction(2)))
    assert subsum_cases(inst) == ("u2", "1")
    inst = validate(UnitEquationInstance.from_units(S_PM2, t, t, (2 - t) * t))
    assert subsum_cases(inst) is None


def test_classify_known():
    cls = classify(known())
    assert set(cls.kinds) >= {"i", "iii"}
    case_i = next(c for c in cls.cases if c.kind == "i")
    assert case_i.subset == ("u1^2", "lam*u1", "u2")
    case_iii = next(c for c in cls.cases if c.kind == "iii")
    assert case_iii.bound == 2**12 * (58 * 2 + 28 * 1) + 16 == height_bound(2, 1)
    assert any(f.startswith("bound-variant") for f in cls.findings)


def test_classify_dependence():
    lam = 2 * t + 3
    S = SSet.from_points([0, Fraction(-3, 2), Fraction(-1, 2), Fraction(-5, 2)])
    inst = validate(UnitEquationInstance(S, lam, 2 * t, t**2, 3 * t + 1))
    dep = next(c for c in classify(inst).cases if c.kind == "ii")
    assert (dep.r, dep.s, dep.mu) == (2, -1, 4)


def test_classify_designation_invariant():
    rng = random.Random(13)
    checked = 0
    while checked < 15:
        inst = rand_solution(rng)
        fin = inst.S.finite
        if len(fin) < 3:
            continue
        other = validate(inst.with_designated([fin[0], fin[-1]]))
        assert classify(other) == classify(inst)
        checked += 1


# -- chain, cover, forced unit, degree


def _grid_instance(u1, u2):
    return validate(UnitEquationInstance.from_units(S_PM2, t, parse_expr(u1), parse_expr(u2)))


def test_chain_regimes():
    split = _grid_instance("num=[-4];den=[0,0,16,0,-8,0,1]", "num=[-1,0,1/4];den=[1]")
    rep = lemma_ab_chain(split)
    assert rep.regime == "split" and not rep.violations
    rep = lemma_ab_chain(_grid_instance("num=[-4];den=[0,2,1]", "num=[-4];den=[4,4,1]"))
    assert rep.regime == "regime-not-supported"
    rep = lemma_ab_chain(_grid_instance("num=[-8,-4];den=[1]", "num=[16,16,4];den=[1]"))
    assert rep.regime == "degenerate-coefficients"


def test_chain_on_random_solutions():
    rng = random.Random(21)
    for _ in range(25):
        rep = lemma_ab_chain(rand_solution(rng))
        assert not rep.violations


def test_cover_bound():
    rep = cover_bound_check(known())
    assert rep.bound_53 == 134 and rep.holds_53
    rng = random.Random(17)
    for _ in range(10):
        rep = cover_bound_check(rand_solution(rng))
        assert rep.holds_53
        if not rep.skipped:
            assert rep.chi_U <= rep.bound_53


def test_forced_u1_generic_and_errors():
    assert forced_u1(S_PM2, t) is None
    with pytest.raises(DomainError):
        forced_u1(S_PM2, RatFunc.const(3))


def test_forced_u1_brute_force():
    lam = t + 1 / t
    S = SSet([INFINITY, Place.at(0), Place.at(1), Place.at(-1), Place.finite(Poly((1, 0, 1)))])
    res = forced_u1(S, lam)
    assert res is not None and res.exponents == (0, 1, 0, 0)
    L = theta(lam, S)
    target = (lam * lam * L * L) / (lam * lam - 4)
    basis = [theta(RatFunc.from_poly(v.min_poly), S) for v in S.finite]
    hits = []
    for e in product(range(-6, 7), repeat=len(basis)):
        th = sum((b * k for b, k in zip(basis, e) if k), RatFunc())
        if th * th == target:
            hits.append(e)
    assert sorted(hits) == sorted([res.exponents, tuple(-x for x in res.exponents)])


def test_degree_bound_known():
    rep = degree_bound(known())
    assert rep.degree_bound == 1
    assert rep.bound == 2**14 * 58 * 2 + 2**14 * 28 * 2
    assert rep.holds and rep.dependent_claim
