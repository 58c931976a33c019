"""Dense univariate polynomials over the rationals.

The public view is an ascending tuple of :class:`fractions.Fraction`
coefficients with no trailing zeros (the zero polynomial has an empty
tuple); the arithmetic itself is delegated to python-flint.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence

import flint
from flint.utils.flint_exceptions import FlintError

__all__ = [
    "Poly",
    "as_fraction",
    "poly_gcd",
    "poly_lcm",
    "poly_sqrt",
    "squarefree_decomposition",
    "irreducible_factors",
]


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


class Poly:
    """Immutable polynomial; arithmetic runs on FLINT's ``fmpq_poly``.

    ``coeffs`` is the ascending tuple of Fractions (built lazily).
    """

    __slots__ = ("_p", "_coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_fraction(c) for c in coeffs]
        self._p = flint.fmpq_poly([flint.fmpq(c.numerator, c.denominator) for c in cs])
        self._coeffs = None
        self._hash = None

    @classmethod
    def _wrap(cls, fp) -> "Poly":
        p = object.__new__(cls)
        p._p = fp
        p._coeffs = None
        p._hash = None
        return p

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c=1) -> "Poly":
        return cls([0] * degree + [c])

    @classmethod
    def t(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Sequence) -> "Poly":
        p = cls.constant(1)
        for r in roots:
            p = p * cls((-as_fraction(r), 1))
        return p

    # -- basic queries --------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        if self._coeffs is None:
            self._coeffs = tuple(_frac(c) for c in self._p.coeffs())
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return self._p.degree()

    @property
    def lc(self) -> Fraction:
        return _frac(self._p.leading_coefficient()) if self else Fraction(0)

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def is_constant(self) -> bool:
        return self._p.degree() <= 0

    def is_monic(self) -> bool:
        return bool(self) and self._p.leading_coefficient() == 1

    def monic(self) -> "Poly":
        if not self or self._p.leading_coefficient() == 1:
            return self
        return Poly._wrap(self._p / self._p.leading_coefficient())

    def __bool__(self) -> bool:
        return not self._p.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._p == other._p
        if isinstance(other, (int, Fraction)):
            return self._p == Poly.constant(other)._p
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("Poly", self.coeffs))
        return self._hash

    def __reduce__(self):
        return (Poly, (self.coeffs,))

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self:
            return "0"
        terms = []
        cs = self.coeffs
        for k in range(len(cs) - 1, -1, -1):
            c = cs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and c == 1:
                s = mono
            elif mono and c == -1:
                s = "-" + mono
            elif mono:
                s = f"({c})*{mono}" if c.denominator != 1 else f"{c}*{mono}"
            else:
                s = str(c)
            terms.append(s)
        return " + ".join(terms).replace("+ -", "- ")

    # -- arithmetic -----------------------------------------------------
    @staticmethod
    def _raw_of(other):
        if isinstance(other, Poly):
            return other._p
        c = as_fraction(other)
        return flint.fmpq_poly([flint.fmpq(c.numerator, c.denominator)])

    def __add__(self, other) -> "Poly":
        return Poly._wrap(self._p + Poly._raw_of(other))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._wrap(-self._p)

    def __sub__(self, other) -> "Poly":
        return Poly._wrap(self._p - Poly._raw_of(other))

    def __rsub__(self, other) -> "Poly":
        return Poly._wrap(Poly._raw_of(other) - self._p)

    def __mul__(self, other) -> "Poly":
        return Poly._wrap(self._p * Poly._raw_of(other))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        return Poly._wrap(self._p**n)

    def __divmod__(self, other) -> tuple["Poly", "Poly"]:
        o = Poly._raw_of(other)
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q, r = divmod(self._p, o)
        return Poly._wrap(q), Poly._wrap(r)

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divides(self, other: "Poly") -> bool:
        """True when ``self`` divides ``other``."""
        return not (other % self)

    def __call__(self, x):
        if isinstance(x, (int, Fraction)):
            x = as_fraction(x)
            return _frac(self._p(flint.fmpq(x.numerator, x.denominator)))
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly._wrap(self._p.derivative())

    def reversed(self, degree: int | None = None) -> "Poly":
        """Coefficients reversed relative to ``degree`` (t^n p(1/t))."""
        n = self.degree if degree is None else degree
        cs = list(self.coeffs) + [Fraction(0)] * (n + 1 - len(self.coeffs))
        return Poly(reversed(cs))


def _frac(c) -> Fraction:
    return Fraction(int(c.p), int(c.q))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; ``gcd(0, 0) = 0``."""
    return Poly._wrap(a._p.gcd(b._p))


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return Poly()
    return (a * b // poly_gcd(a, b)).monic()


def poly_sqrt(p: Poly) -> Poly | None:
    """Return ``q`` with ``q*q == p`` and positive leading coefficient, else None.

    The leading coefficient of ``p`` must itself be a rational square.
    """
    if not p:
        return Poly()
    if p.degree % 2 or p.lc < 0:
        return None
    try:
        q = p._p.sqrt()
    except (ValueError, FlintError):
        return None
    if q.leading_coefficient() < 0:
        q = -q
    return Poly._wrap(q)


def _fraction_sqrt(x: Fraction) -> Fraction | None:
    from math import isqrt

    if x < 0:
        return None
    a, b = x.numerator, x.denominator
    ra, rb = isqrt(a), isqrt(b)
    if ra * ra == a and rb * rb == b:
        return Fraction(ra, rb)
    return None


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Squarefree factorization: monic squarefree ``(g_i, i)`` with f ~ prod g_i^i."""
    if f.degree < 1:
        return []
    _, facs = f._p.factor_squarefree()
    return sorted(((Poly._wrap(g).monic(), i) for g, i in facs), key=lambda gi: gi[1])


@lru_cache(maxsize=4096)
def _factor_cached(coeffs: tuple) -> tuple:
    _, facs = Poly(coeffs)._p.factor()
    out = []
    for fac, mult in facs:
        out.append((Poly._wrap(fac).monic().coeffs, mult))
    out.sort(key=lambda fm: (len(fm[0]), fm[0]))
    return tuple(out)


def irreducible_factors(f: Poly) -> list[tuple[Poly, int]]:
    """Monic irreducible factors over Q with multiplicities (constants dropped)."""
    if f.degree < 1:
        return []
    return [(Poly(cs), m) for cs, m in _factor_cached(f.coeffs)]
