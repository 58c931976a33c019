from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from unitfield.funfield import INFINITY, Place, SSet
from unitfield.poly import Poly
from unitfield.resultant import determinant, resultant, sylvester_matrix
from unitfield.serialize import (
    format_expr,
    parse_expr,
    place_from_json,
    place_to_json,
    poly_from_json,
    poly_to_json,
    ratfunc_from_json,
    ratfunc_to_json,
    sset_from_json,
    sset_to_json,
)

from conftest import polys, ratfuncs

Z = Fraction(0)
ints = st.integers(-9, 9)


def test_linear_resultant():
    # Res(aY + b, cY + d) in Y is a d - b c up to the Sylvester sign
    a, b, c, d = map(Fraction, (2, 3, 5, 7))
    assert resultant([b, a], [d, c], Z) == a * d - b * c


@given(st.lists(ints, min_size=1, max_size=3), st.lists(ints, min_size=1, max_size=3))
def test_resultant_vanishes_iff_common_root(r1, r2):
    p, q = Poly.from_roots(r1), Poly.from_roots(r2)
    res = resultant(list(p.coeffs), list(q.coeffs), Z)
    assert (res == 0) == bool(set(r1) & set(r2))


@given(st.lists(ints, min_size=1, max_size=3), st.lists(ints, min_size=1, max_size=3))
def test_resultant_product_formula(r1, r2):
    p, q = Poly.from_roots(r1), Poly.from_roots(r2)
    prod = Fraction(1)
    for x in r1:
        for y in r2:
            prod *= x - y
    assert resultant(list(p.coeffs), list(q.coeffs), Z) == prod


def test_determinant_small():
    m = [[Fraction(x) for x in row] for row in ((2, 1, 0), (1, 3, 1), (0, 1, 4))]
    assert determinant(m, Z) == 2 * (12 - 1) - 1 * (4 - 0)
    assert len(sylvester_matrix([1, 2, 3], [4, 5], Z)) == 3


@given(polys(nonzero=True))
def test_poly_roundtrip(p):
    assert poly_from_json(poly_to_json(p)) == p


@given(ratfuncs())
def test_ratfunc_roundtrip(f):
    assert ratfunc_from_json(ratfunc_to_json(f)) == f
    assert parse_expr(format_expr(f)) == f


def test_place_and_sset_roundtrip():
    places = [INFINITY, Place.at(Fraction(-3, 2)), Place.finite(Poly((1, 0, 1)))]
    for v in places:
        assert place_from_json(place_to_json(v)) == v
    S = SSet(places)
    back = sset_from_json(sset_to_json(S))
    assert back == S and back.designated == S.designated


def test_parse_expr():
    f = parse_expr("num=[0,1];den=[1]")
    assert f.num == Poly((0, 1)) and f.den == Poly((1,))
    assert parse_expr("num=[1/2, 0, 3]") == parse_expr("num=[1/2,0,3];den=[1]")
    with pytest.raises(ValueError):
        parse_expr("t^2")
    with pytest.raises(ValueError):
        parse_expr("num=[1];den=[0]")
