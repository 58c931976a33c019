"""Seeded random S-sets, units and instances for the suites and tests."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from ..funfield import INFINITY, Place, RatFunc, SSet, is_unit
from ..poly import Poly, irreducible_factors
from ..vojta import UnitEquationInstance, validate
from ..errors import InvalidInstanceError

__all__ = [
    "rand_const",
    "rand_sset",
    "rand_unit",
    "rand_lambda",
    "strict_sset_for",
    "rand_identity_instance",
    "rand_strict_instance",
    "rand_solution",
]


def rand_const(rng: random.Random, bound: int = 5) -> Fraction:
    return Fraction(rng.choice((-1, 1)) * rng.randint(1, bound), rng.randint(1, bound))


def rand_sset(rng: random.Random, n_finite: int, quadratic: bool = False) -> SSet:
    """Distinct integer points in [-6, 6]; optionally one place t^2 + 1."""
    places = [INFINITY]
    k = n_finite
    if quadratic and n_finite:
        places.append(Place(Poly((1, 0, 1))))
        k -= 1
    places += [Place.at(a) for a in rng.sample(range(-6, 7), k)]
    return SSet(places)


def rand_unit(
    rng: random.Random, S: SSet, emax: int = 3, nonconstant: bool = False, cbound: int = 5
) -> RatFunc:
    while True:
        num, den = Poly((rand_const(rng, cbound),)), Poly((1,))
        for v in S.finite:
            e = rng.randint(-emax, emax)
            if e > 0:
                num = num * v.min_poly**e
            elif e < 0:
                den = den * v.min_poly ** (-e)
        u = RatFunc(num, den)
        if not (nonconstant and u.is_constant()):
            return u


def rand_lambda(rng: random.Random) -> RatFunc:
    """A non-constant rational function of degree <= 2 with small data."""
    t = RatFunc.t()
    shape = rng.randrange(4)
    a = rand_const(rng, 3)
    r, s = rng.sample(range(-3, 4), 2)
    if shape == 0:
        return (t - r) * a
    if shape == 1:
        return (t - r) * (t - s) * a
    if shape == 2:
        return a / (t - r)
    return (t - r) * a / (t - s)


def _places_of(f: RatFunc) -> set[Place]:
    out = set()
    for p in (f.num, f.den):
        out |= {Place(q) for q, _ in irreducible_factors(p)}
    return out


def strict_sset_for(lam: RatFunc, extra: Sequence[Place] = ()) -> SSet:
    """Smallest S making lam and lam^2 - 4 units, plus ``extra``."""
    places = _places_of(lam) | _places_of(lam - 2) | _places_of(lam + 2) | set(extra)
    places.add(INFINITY)
    return SSet(places)


def rand_identity_instance(rng: random.Random) -> UnitEquationInstance:
    """3-4 place S-set, exponents in [-3, 3], constants with |num|, den <= 5.

    No solution is attached (y is None) and strictness is off: the formula
    identities hold for arbitrary units.
    """
    S = rand_sset(rng, rng.choice((2, 3)))
    lam = rand_unit(rng, S, 2, nonconstant=True)
    return UnitEquationInstance(S, lam, rand_unit(rng, S), rand_unit(rng, S), strict=False)


def rand_strict_instance(rng: random.Random, emax: int = 3) -> UnitEquationInstance:
    lam = rand_lambda(rng)
    extra = [Place.at(rng.randint(-6, 6))] if rng.random() < 0.3 else []
    S = strict_sset_for(lam, extra)
    return UnitEquationInstance(S, lam, rand_unit(rng, S, emax), rand_unit(rng, S, emax))


def rand_solution(rng: random.Random, emax: int = 2) -> UnitEquationInstance:
    """A valid strict instance from one of three explicit families.

    * ``y = u1 + 1``:      ``u2 = (2 - lam) u1``
    * ``y = u1 - 1``:      ``u2 = -(2 + lam) u1``
    * ``y = u1 + lam/2``:  ``u2 = lam^2/4 - 1``

    In each case u2 is an S-unit because S contains the zeros of lam -+ 2.
    """
    while True:
        inst = rand_strict_instance(rng, emax)
        S, lam, u1 = inst.S, inst.lam, inst.u1
        family = rng.randrange(3)
        if family == 0:
            y, u2 = u1 + 1, (2 - lam) * u1
        elif family == 1:
            y, u2 = u1 - 1, -(lam + 2) * u1
        else:
            y, u2 = u1 + lam / 2, lam * lam / 4 - 1
        if not y or not u2 or not is_unit(u2, S):
            continue
        try:
            return validate(UnitEquationInstance(S, lam, u1, u2, y))
        except InvalidInstanceError:
            continue
