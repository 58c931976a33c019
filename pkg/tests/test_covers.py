import random

import pytest
from hypothesis import given, strategies as st

from unitfield.covers import (
    QuadCoverSpec,
    chi_of_lifted_set,
    cover_from_functions,
    genus_of_cover,
    points_above,
    ramification_locus,
    squarefree_part,
)
from unitfield.errors import DegenerateError
from unitfield.funfield import INFINITY, Place, RatFunc
from unitfield.poly import Poly

t = Poly.t()


def Q(p):
    return QuadCoverSpec.from_poly(p)


def at(a):
    return Place.at(a)


def test_squarefree_part_examples():
    assert squarefree_part(t**3) == (t, t)
    assert squarefree_part(t * (t - 1) ** 2) == (t, t - 1)
    assert squarefree_part(t**2 + 1) == (t**2 + 1, Poly((1,)))


def test_ramification_locus_examples():
    assert ramification_locus(Q(t)) == {at(0), INFINITY}
    quartic = t * (t - 1) * (t - 2) * (t - 3)
    assert ramification_locus(Q(quartic)) == {at(0), at(1), at(2), at(3)}
    loc = ramification_locus(Q(t**2 + 1))
    assert loc == {Place.finite(t**2 + 1)}
    assert sum(v.degree for v in loc) == 2


def test_genus_examples():
    assert genus_of_cover([Q(t)]) == 0
    assert genus_of_cover([Q(t * (t - 1) * (t - 2) * (t - 3))]) == 1
    assert genus_of_cover([Q(t), Q(t - 1)]) == 0


def test_dependent_specs_rejected():
    with pytest.raises(DegenerateError):
        genus_of_cover([Q(t), Q(4 * t)])


def test_points_above_examples():
    assert points_above(at(0), [Q(t)]) == 1
    assert points_above(at(5), [Q(t)]) == 2
    assert points_above(at(0), [Q(t), Q(t - 1)]) == 2


def test_chi_examples():
    assert chi_of_lifted_set({at(0), INFINITY}, [Q(t)]) == 0
    assert chi_of_lifted_set({at(0), INFINITY}, []) == 0
    quartic = t * (t - 1) * (t - 2) * (t - 3)
    assert chi_of_lifted_set({at(0), at(1), INFINITY}, [Q(quartic)]) == 4


def _rand_squarefree(rng, n):
    roots = rng.sample(range(-20, 21), n)
    return Poly.from_roots(roots)


@pytest.mark.parametrize("n", range(1, 9))
def test_genus_oracle_hyperelliptic(n):
    rng = random.Random(n)
    for _ in range(5):
        d = _rand_squarefree(rng, n)
        assert genus_of_cover([Q(d)]) == (n - 1) // 2


def test_genus_with_irreducible_factors():
    # degree-2 and degree-3 irreducible places count with their degree
    d = (t**2 + 1) * (t**3 - 2)
    assert genus_of_cover([Q(d)]) == 2


@given(st.lists(st.integers(-8, 8), min_size=1, max_size=5, unique=True),
       st.lists(st.integers(-8, 8), min_size=1, max_size=5, unique=True))
def test_biquadratic_labelings_agree(r1, r2):
    d1, d2 = Poly.from_roots(r1), Poly.from_roots(r2)
    d3 = squarefree_part(d1 * d2)[0]
    if d1 == d2 or d3.is_constant():
        return
    labelings = [(d1, d2), (d1, d3), (d2, d3)]
    genera = {genus_of_cover([Q(a), Q(b)]) for a, b in labelings}
    assert len(genera) == 1


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=4, unique=True),
       st.sets(st.integers(-6, 6), max_size=4), st.sets(st.integers(-6, 6), max_size=4))
def test_chi_monotone(roots, base, extra):
    specs = [Q(Poly.from_roots(roots))]
    small = {at(a) for a in base} | {INFINITY}
    big = small | {at(a) for a in extra}
    assert chi_of_lifted_set(small, specs) <= chi_of_lifted_set(big, specs)


def test_cover_from_functions_collapses():
    f = RatFunc.from_poly(t)
    c = cover_from_functions([f, f * 9, RatFunc.from_poly(t * t)])
    assert c.degree == 2 and c.genus == 0
    c = cover_from_functions([f, RatFunc.from_poly(t - 1)])
    assert c.degree == 4
