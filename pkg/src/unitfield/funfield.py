"""The rational function field of the projective line over Q.

Places of Q(t) are Galois orbits of geometric points: a monic irreducible
polynomial (weighted by its degree) or the point at infinity.  Every count
and height below is degree-weighted, so the numbers agree with the
geometric ones over an algebraic closure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .errors import DomainError, UndefinedValuationError
from .poly import Poly, as_fraction, irreducible_factors, poly_gcd, poly_sqrt

__all__ = [
    "RatFunc",
    "Place",
    "INFINITY",
    "SSet",
    "Divisor",
    "Dependence",
    "divisor",
    "valuation",
    "height",
    "euler_char",
    "d_omega",
    "theta",
    "membership",
    "is_unit",
    "is_integer",
    "unit_exponents",
    "sqrt_up_to_constant",
    "mult_dependence",
    "proj_height",
    "outside_degree",
]

_ONE = Poly((1,))
_ZERO = Poly(())


class RatFunc:
    """Reduced quotient ``num/den`` with ``den`` monic."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        num = num if isinstance(num, Poly) else Poly.constant(num)
        den = den if isinstance(den, Poly) else Poly.constant(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            num, den = _ZERO, _ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            lc = den.lc
            if lc != 1:
                num, den = num * (1 / lc), den.monic()
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "RatFunc":
        f = object.__new__(cls)
        f.num, f.den, f._hash = num, den, None
        return f

    @classmethod
    def t(cls) -> "RatFunc":
        return cls._raw(Poly.t(), _ONE)

    @classmethod
    def const(cls, c) -> "RatFunc":
        return cls._raw(Poly.constant(as_fraction(c)), _ONE)

    @classmethod
    def from_poly(cls, p: Poly) -> "RatFunc":
        return cls._raw(p, _ONE)

    @classmethod
    def from_coeffs(cls, num: Sequence, den: Sequence = (1,)) -> "RatFunc":
        return cls(Poly(num), Poly(den))

    # -- queries --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def is_constant(self) -> bool:
        return self.den.degree == 0 and self.num.degree <= 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise DomainError(f"{self} is not constant")
        return self.num.lc

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.den.degree == 0 and self.num == other
        if isinstance(other, Poly):
            return self.den.degree == 0 and self.num == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num.coeffs, self.den.coeffs))
        return self._hash

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"

    # -- arithmetic -----------------------------------------------------
    @staticmethod
    def _lift(x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, Poly):
            return RatFunc._raw(x, _ONE)
        return RatFunc.const(x)

    def __add__(self, other) -> "RatFunc":
        other = self._lift(other)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        if self.den.degree == 0 and other.den.degree == 0:
            return RatFunc._raw(self.num + other.num, _ONE)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other) -> "RatFunc":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "RatFunc":
        return self._lift(other) - self

    def __mul__(self, other) -> "RatFunc":
        if isinstance(other, (int, Fraction)):
            if not other:
                return RatFunc._raw(_ZERO, _ONE)
            return RatFunc._raw(self.num * other, self.den)
        other = self._lift(other)
        if not self.num or not other.num:
            return RatFunc._raw(_ZERO, _ONE)
        a, b, c, d = self.num, self.den, other.num, other.den
        g1 = poly_gcd(a, d) if d.degree > 0 and a.degree > 0 else _ONE
        g2 = poly_gcd(c, b) if b.degree > 0 and c.degree > 0 else _ONE
        if g1.degree > 0:
            a, d = a // g1, d // g1
        if g2.degree > 0:
            c, b = c // g2, b // g2
        return RatFunc._raw(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("inverse of the zero function")
        lc = self.num.lc
        return RatFunc._raw(self.den * (1 / lc), self.num.monic())

    def __truediv__(self, other) -> "RatFunc":
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other) -> "RatFunc":
        return self._lift(other) * self.inverse()

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc._raw(self.num**n, self.den**n)

    def derivative(self) -> "RatFunc":
        """Plain d/dt."""
        a, b = self.num, self.den
        if b.degree == 0:
            return RatFunc._raw(a.derivative(), _ONE)
        return RatFunc(a.derivative() * b - a * b.derivative(), b * b)

    def __call__(self, x):
        d = self.den(x)
        if not d:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(x) / d


# ---------------------------------------------------------------------------
# Places


@dataclass(frozen=True)
class Place:
    """A closed point of the projective line; ``min_poly is None`` means infinity."""

    min_poly: Poly | None = None

    @classmethod
    def finite(cls, p, check: bool = True) -> "Place":
        p = p if isinstance(p, Poly) else Poly(p)
        if p.degree < 1:
            raise DomainError("a finite place needs a polynomial of degree >= 1")
        p = p.monic()
        if check:
            facs = irreducible_factors(p)
            if len(facs) != 1 or facs[0][1] != 1:
                raise DomainError(f"{p} is not irreducible over Q")
        return cls(p)

    @classmethod
    def at(cls, a) -> "Place":
        """The rational point t = a."""
        return cls(Poly((-as_fraction(a), 1)))

    @property
    def is_infinity(self) -> bool:
        return self.min_poly is None

    @property
    def degree(self) -> int:
        return 1 if self.min_poly is None else self.min_poly.degree

    def sort_key(self) -> tuple:
        if self.min_poly is None:
            return (1, 0, ())
        return (0, self.min_poly.degree, self.min_poly.coeffs)

    def __lt__(self, other: "Place") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "inf" if self.min_poly is None else str(self.min_poly)


INFINITY = Place(None)


def _canonical(places: Iterable[Place]) -> tuple[Place, ...]:
    return tuple(sorted(set(places), key=Place.sort_key))


class SSet:
    """A finite set of places containing infinity, plus the designated places.

    The designated places (at most two finite ones) fix the differential
    form ``dt/m`` with ``m`` the product of their minimal polynomials.
    By default they are the first two finite places in canonical order;
    any other choice of two (or all, if fewer) finite members is admissible.
    """

    __slots__ = ("places", "designated", "m", "_finite", "_hash")

    def __init__(self, places: Iterable[Place], designated: Sequence[Place] | None = None):
        ps = _canonical(places)
        if INFINITY not in ps:
            raise DomainError("S must contain the place at infinity")
        finite = tuple(p for p in ps if not p.is_infinity)
        want = min(2, len(finite))
        if designated is None:
            des = finite[:want]
        else:
            des = _canonical(designated)
            if len(des) != want or any(p not in finite for p in des):
                raise DomainError(
                    f"designated places must be {want} distinct finite members of S"
                )
        m = _ONE
        for p in des:
            m = m * p.min_poly
        self.places = ps
        self.designated = des
        self.m = m
        self._finite = finite
        self._hash = None

    @classmethod
    def from_points(cls, points: Iterable, designated: Sequence | None = None) -> "SSet":
        """Rational points (``None`` or ``"inf"`` for infinity) or Places."""

        def conv(x):
            if isinstance(x, Place):
                return x
            if x is None or x == "inf":
                return INFINITY
            return Place.at(x)

        ps = [conv(x) for x in points]
        if INFINITY not in ps:
            ps.append(INFINITY)
        des = None if designated is None else [conv(x) for x in designated]
        return cls(ps, des)

    @property
    def finite(self) -> tuple[Place, ...]:
        return self._finite

    @property
    def size(self) -> int:
        """Geometric cardinality (degree-weighted)."""
        return sum(p.degree for p in self.places)

    @property
    def chi(self) -> int:
        return euler_char(0, self.size)

    def with_designated(self, designated: Sequence[Place]) -> "SSet":
        return SSet(self.places, designated)

    def union(self, extra: Iterable[Place]) -> "SSet":
        """Enlarged set; keeps the designated places."""
        return SSet(list(self.places) + list(extra), self.designated)

    def __contains__(self, p: Place) -> bool:
        return p in self.places

    def __iter__(self) -> Iterator[Place]:
        return iter(self.places)

    def __len__(self) -> int:
        return len(self.places)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SSet)
            and self.places == other.places
            and self.designated == other.designated
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.places, self.designated))
        return self._hash

    def __repr__(self) -> str:
        return "SSet({" + ", ".join(map(str, self.places)) + "})"


# ---------------------------------------------------------------------------
# Valuations, divisors, heights


def _require_nonzero(f: RatFunc, what: str) -> None:
    if not f.num:
        raise UndefinedValuationError(f"{what} of the zero function is undefined")


def _poly_order(p: Poly, q: Poly) -> int:
    k = 0
    while True:
        quo, rem = divmod(p, q)
        if rem:
            return k
        p = quo
        k += 1


def valuation(f: RatFunc, v: Place) -> int:
    """Order of vanishing of ``f`` at ``v``."""
    _require_nonzero(f, "valuation")
    if v.is_infinity:
        return f.den.degree - f.num.degree
    return _poly_order(f.num, v.min_poly) - _poly_order(f.den, v.min_poly)


class Divisor(Mapping):
    """Finitely supported map Place -> nonzero int."""

    __slots__ = ("_d",)

    def __init__(self, data: Mapping[Place, int] | None = None):
        self._d = {p: int(k) for p, k in (data or {}).items() if k}

    def __getitem__(self, p: Place) -> int:
        return self._d.get(p, 0)

    def __iter__(self):
        return iter(sorted(self._d, key=Place.sort_key))

    def __len__(self) -> int:
        return len(self._d)

    def __contains__(self, p) -> bool:
        return p in self._d

    def degree(self) -> int:
        return sum(p.degree * k for p, k in self._d.items())

    def support(self) -> tuple[Place, ...]:
        return tuple(self)

    def __add__(self, other: "Divisor") -> "Divisor":
        out = dict(self._d)
        for p, k in other.items():
            out[p] = out.get(p, 0) + k
        return Divisor(out)

    def __neg__(self) -> "Divisor":
        return Divisor({p: -k for p, k in self._d.items()})

    def __mul__(self, n: int) -> "Divisor":
        return Divisor({p: n * k for p, k in self._d.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, Divisor):
            return self._d == other._d
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._d.items()))

    def __repr__(self) -> str:
        return "Divisor({" + ", ".join(f"{p}: {k}" for p, k in self.items()) + "})"


def divisor(f: RatFunc) -> Divisor:
    """div(f) by factoring numerator and denominator over Q."""
    _require_nonzero(f, "divisor")
    d: dict[Place, int] = {}
    for q, k in irreducible_factors(f.num):
        d[Place(q)] = d.get(Place(q), 0) + k
    for q, k in irreducible_factors(f.den):
        d[Place(q)] = d.get(Place(q), 0) - k
    d[INFINITY] = f.den.degree - f.num.degree
    return Divisor(d)


def height(f: RatFunc) -> int:
    """Degree of f as a map to P^1; equals the weighted count of its zeros."""
    _require_nonzero(f, "height")
    return max(f.num.degree, f.den.degree)


def euler_char(genus: int, s_count: int) -> int:
    return 2 * genus - 2 + s_count


# ---------------------------------------------------------------------------
# S-integers and S-units


def strip_places(p: Poly, places: Iterable[Place]) -> tuple[Poly, list[int]]:
    """Divide out every finite place in ``places``; return remainder and orders."""
    exps = []
    for v in places:
        if v.is_infinity:
            continue
        k = 0
        while p.degree >= v.min_poly.degree:
            quo, rem = divmod(p, v.min_poly)
            if rem:
                break
            p = quo
            k += 1
        exps.append(k)
    return p, exps


def outside_degree(p: Poly, S: SSet) -> int:
    """Weighted number of zeros of the polynomial ``p`` at finite places outside S."""
    rest, _ = strip_places(p, S.finite)
    return rest.degree


def is_unit(f: RatFunc, S: SSet) -> bool:
    if not f.num:
        return False
    return strip_places(f.num, S.finite)[0].degree == 0 and strip_places(
        f.den, S.finite
    )[0].degree == 0


def is_integer(f: RatFunc, S: SSet) -> bool:
    if not f.num:
        return True
    return strip_places(f.den, S.finite)[0].degree == 0


def membership(f: RatFunc, S: SSet, mode: str = "unit") -> bool:
    """S-unit (``mode="unit"``) or S-integer (``mode="integer"``) test.

    Infinity always lies in S, so only finite places need checking.
    """
    if mode == "unit":
        if not f.num:
            raise UndefinedValuationError("unit test of the zero function")
        return is_unit(f, S)
    if mode == "integer":
        return is_integer(f, S)
    raise ValueError(f"unknown membership mode {mode!r}")


def unit_exponents(u: RatFunc, S: SSet) -> tuple[Fraction, tuple[int, ...]]:
    """Write an S-unit as ``c * prod(p_i ** e_i)`` over the finite places of S."""
    if not u.num:
        raise DomainError("zero is not an S-unit")
    rn, en = strip_places(u.num, S.finite)
    rd, ed = strip_places(u.den, S.finite)
    if rn.degree or rd.degree:
        raise DomainError(f"{u} is not an S-unit for {S}")
    return rn.lc / rd.lc, tuple(a - b for a, b in zip(en, ed))


# ---------------------------------------------------------------------------
# Derivatives with respect to the canonical differential form


def d_omega(f: RatFunc, S: SSet) -> RatFunc:
    """``f'`` with ``df = f' * omega`` and ``omega = dt/m``."""
    if f.is_constant():
        return RatFunc()
    return f.derivative() * S.m


def theta(u: RatFunc, S: SSet) -> RatFunc:
    """Logarithmic derivative ``theta_u = u'/u`` of an S-unit.

    Computed from the exponent vector as ``m * sum(e_i p_i'/p_i)``, which
    exposes the simple poles directly.
    """
    _, exps = unit_exponents(u, S)
    acc = RatFunc()
    for v, e in zip(S.finite, exps):
        if e:
            p = v.min_poly
            acc = acc + RatFunc(p.derivative() * e, p)
    return acc * S.m


# ---------------------------------------------------------------------------
# Squares and multiplicative dependence


class SquareRoot(NamedTuple):
    root: RatFunc
    constant: Fraction


def sqrt_up_to_constant(f: RatFunc) -> SquareRoot | None:
    """Find ``g`` (monic numerator and denominator) and ``c`` with ``f = c g^2``.

    Returns None when some valuation of ``f`` is odd.
    """
    _require_nonzero(f, "square root")
    c = f.num.lc
    gn = poly_sqrt(f.num.monic())
    if gn is None:
        return None
    gd = poly_sqrt(f.den)
    if gd is None:
        return None
    return SquareRoot(RatFunc._raw(gn, gd), c)


class Dependence(NamedTuple):
    r: int
    s: int
    mu: Fraction


def mult_dependence(
    a: RatFunc, b: RatFunc, S: SSet, max_exp: int | None = None
) -> Dependence | None:
    """Primitive relation ``a^r b^s = mu`` between S-units, if one exists.

    Constant inputs follow the conventions ``(1, 0, a)`` / ``(0, 1, b)``.
    """
    ca, ea = unit_exponents(a, S)
    cb, eb = unit_exponents(b, S)
    if not any(eb):
        rel = Dependence(0, 1, cb)
    elif not any(ea):
        rel = Dependence(1, 0, ca)
    else:
        k = next(i for i, x in enumerate(ea) if x)
        r, s = eb[k], -ea[k]
        g = gcd(r, s)
        r, s = r // g, s // g
        if r < 0 or (r == 0 and s < 0):
            r, s = -r, -s
        if any(r * x + s * y for x, y in zip(ea, eb)):
            return None
        rel = Dependence(r, s, ca**r * cb**s)
    if max_exp is not None and max(abs(rel.r), abs(rel.s)) > max_exp:
        return None
    return rel


def proj_height(thetas: Sequence[RatFunc]) -> int:
    """Height of the point ``(theta_1 : ... : theta_m)`` of projective space."""
    if not thetas:
        raise DomainError("projective height of an empty tuple")
    if any(not th.num for th in thetas):
        raise DomainError("projective height needs nonzero entries")
    lcm = _ONE
    for th in thetas:
        lcm = (lcm * th.den) // poly_gcd(lcm, th.den)
    polys = [th.num * (lcm // th.den) for th in thetas]
    g = polys[0]
    for p in polys[1:]:
        g = poly_gcd(g, p)
    return max((p // g).degree for p in polys)


def subset_sums(terms: Sequence[RatFunc]) -> Iterator[tuple[tuple[int, ...], RatFunc]]:
    """Every nonempty subset (as index tuple, lexicographic) with its sum."""
    n = len(terms)
    idx = sorted(
        (c for k in range(1, n + 1) for c in combinations(range(n), k)),
    )
    for c in idx:
        acc = RatFunc()
        for i in c:
            acc = acc + terms[i]
        yield c, acc
