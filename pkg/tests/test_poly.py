"""Poly against a naive list-of-Fractions oracle."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from unitfield.poly import (
    Poly,
    irreducible_factors,
    poly_gcd,
    poly_sqrt,
    squarefree_decomposition,
)

from conftest import polys


def _trim(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def naive_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def naive_add(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim(x + y for x, y in zip(a, b))


def naive_divmod(a, b):
    a, b = list(a), _trim(b)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(_trim(a)) >= len(b):
        a = _trim(a)
        k = len(a) - len(b)
        c = a[-1] / b[-1]
        q[k] = c
        for i, y in enumerate(b):
            a[i + k] -= c * y
    return _trim(q), _trim(a)


def test_normalization():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly([]).degree == -1
    assert Poly([0]).is_zero()
    assert Poly([3]).degree == 0


@given(polys(), polys())
def test_ring_ops_match_oracle(a, b):
    assert list((a * b).coeffs) == naive_mul(a.coeffs, b.coeffs)
    assert list((a + b).coeffs) == naive_add(a.coeffs, b.coeffs)
    assert a - a == Poly(())


@given(polys(), polys(nonzero=True))
def test_divmod_matches_oracle(a, b):
    q, r = divmod(a, b)
    nq, nr = naive_divmod(a.coeffs, b.coeffs)
    assert list(q.coeffs) == nq and list(r.coeffs) == nr
    assert r.degree < b.degree or r.is_zero()


@given(polys(nonzero=True), polys(nonzero=True), polys(nonzero=True))
def test_gcd_divides_and_is_maximal(a, b, c):
    g = poly_gcd(a * c, b * c)
    assert g.is_monic()
    assert g.divides(a * c) and g.divides(b * c)
    assert c.monic().divides(g) or c.is_constant()


@given(polys(max_degree=3, nonzero=True), st.fractions(min_value=-5, max_value=5))
def test_evaluation_is_horner(p, x):
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    assert p(x) == acc


@given(polys(max_degree=3, nonzero=True))
def test_sqrt_of_square(p):
    root = poly_sqrt(p * p)
    assert root is not None and root * root == p * p


def test_sqrt_rejects():
    assert poly_sqrt(Poly([0, 0, 0, 1])) is None
    assert poly_sqrt(Poly([1, 0, 1])) is None
    assert poly_sqrt(Poly([0, 0, -1])) is None


@given(polys(max_degree=3, nonzero=True), polys(max_degree=2, nonzero=True))
def test_squarefree_decomposition_reconstructs(a, b):
    f = a * b * b
    parts = squarefree_decomposition(f)
    prod = Poly((1,))
    for q, m in parts:
        assert q.is_monic()
        prod = prod * q**m
    assert prod == f.monic()


def test_irreducible_factors():
    t = Poly.t()
    f = (t**2 + 1) * (t - 1) ** 2 * (t + 2)
    got = {(tuple(q.coeffs), m) for q, m in irreducible_factors(f)}
    assert got == {((1, 0, 1), 1), ((-1, 1), 2), ((2, 1), 1)}


def test_exact_div_raises():
    with pytest.raises(ArithmeticError):
        Poly([1, 1]).exact_div(Poly([0, 1]))
