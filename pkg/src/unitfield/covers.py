"""Genus and Euler characteristic of (bi)quadratic covers of P^1.

A quadratic cover is given by the square root of a rational function; only
the squarefree part of that function matters.  All counts are geometric:
over the algebraic closure an unramified place splits completely, so no
residue-field arithmetic is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DegenerateError
from .funfield import INFINITY, Place, RatFunc, euler_char
from .poly import Poly, irreducible_factors, poly_lcm, squarefree_decomposition

__all__ = [
    "QuadCoverSpec",
    "CoverData",
    "squarefree_part",
    "ramification_locus",
    "genus_of_cover",
    "points_above",
    "chi_of_lifted_set",
    "build_cover",
    "cover_from_functions",
]


def squarefree_part(f: Poly) -> tuple[Poly, Poly]:
    """``(sf, sq)`` with ``f = lc(f) * sf * sq**2``, both monic, ``sf`` squarefree."""
    if not f:
        raise DegenerateError("squarefree part of the zero polynomial")
    sf = Poly((1,))
    sq = Poly((1,))
    for g, i in squarefree_decomposition(f):
        if i % 2:
            sf = sf * g
        sq = sq * g ** (i // 2)
    return sf, sq


@dataclass(frozen=True)
class QuadCoverSpec:
    """The cover ``w^2 = d`` with ``d = c * d_sf * square_part**2``."""

    d_sf: Poly
    square_part: Poly
    inf_ramified: bool

    def __post_init__(self):
        if not self.d_sf.is_monic():
            raise DegenerateError("d_sf must be monic")
        if self.inf_ramified != bool(self.d_sf.degree % 2):
            raise DegenerateError("inf_ramified must equal parity of deg d_sf")

    @classmethod
    def from_poly(cls, d: Poly) -> "QuadCoverSpec":
        sf, sq = squarefree_part(d)
        return cls(sf, sq, bool(sf.degree % 2))

    @classmethod
    def from_function(cls, d: RatFunc) -> "QuadCoverSpec":
        """Square root of a rational function: num/den ~ num*den/den^2."""
        if not d:
            raise DegenerateError("quadratic cover of the zero function")
        sf, sq = squarefree_part(d.num * d.den)
        return cls(sf, sq, bool(sf.degree % 2))

    @property
    def is_trivial(self) -> bool:
        """The square root already lies in the base field (geometrically)."""
        return self.d_sf.degree == 0

    def ramifies_at(self, v: Place) -> bool:
        if v.is_infinity:
            return self.inf_ramified
        return not (self.d_sf % v.min_poly)

    def to_dict(self) -> dict:
        return {
            "d_sf": [str(c) for c in self.d_sf.coeffs],
            "square_part": [str(c) for c in self.square_part.coeffs],
            "inf_ramified": self.inf_ramified,
        }


@dataclass(frozen=True)
class CoverData:
    specs: tuple[QuadCoverSpec, ...]
    genus: int
    degree: int

    def to_dict(self) -> dict:
        return {
            "d_sf": [[str(c) for c in s.d_sf.coeffs] for s in self.specs],
            "genus": self.genus,
            "degree": self.degree,
        }


def ramification_locus(spec: QuadCoverSpec) -> frozenset[Place]:
    places = {Place(q) for q, _ in irreducible_factors(spec.d_sf)}
    if spec.inf_ramified:
        places.add(INFINITY)
    return frozenset(places)


def _ramification_count(spec: QuadCoverSpec) -> int:
    # d_sf is squarefree, so the weighted count of its places is its degree
    return spec.d_sf.degree + (1 if spec.inf_ramified else 0)


def _check_specs(specs: Sequence[QuadCoverSpec]) -> None:
    if len(specs) > 2:
        raise DegenerateError("at most two quadratic specs are supported")
    for s in specs:
        if s.is_trivial:
            raise DegenerateError("trivial quadratic spec (square discriminant)")
    if len(specs) == 2 and specs[0].d_sf == specs[1].d_sf:
        raise DegenerateError("dependent specs: product of the discriminants is a square")


def genus_of_cover(specs: Sequence[QuadCoverSpec]) -> int:
    """Riemann-Hurwitz over a genus-0 base with all inertia of order <= 2."""
    specs = tuple(specs)
    _check_specs(specs)
    if not specs:
        return 0
    if len(specs) == 1:
        r = _ramification_count(specs[0])
        if r % 2:
            raise AssertionError("odd ramification count for a quadratic cover")
        # 2g - 2 = 2 * (-2) + r
        return (r - 2) // 2
    d1, d2 = specs[0], specs[1]
    # a place ramifies in some intermediate quadratic iff it divides d1 or d2
    r_union = poly_lcm(d1.d_sf, d2.d_sf).degree + (
        1 if (d1.inf_ramified or d2.inf_ramified) else 0
    )
    # 2g - 2 = 4 * (-2) + 2 * r_union
    return r_union - 3


def cover_degree(specs: Sequence[QuadCoverSpec]) -> int:
    return 2 ** len(specs)


def points_above(v: Place, specs: Sequence[QuadCoverSpec]) -> int:
    deg = cover_degree(specs)
    e = 2 if any(s.ramifies_at(v) for s in specs) else 1
    return v.degree * deg // e


def chi_of_lifted_set(base_set: Iterable[Place], specs: Sequence[QuadCoverSpec]) -> int:
    specs = tuple(specs)
    g = genus_of_cover(specs)
    return euler_char(g, sum(points_above(v, specs) for v in set(base_set)))


def build_cover(specs: Sequence[QuadCoverSpec]) -> CoverData:
    specs = tuple(specs)
    return CoverData(specs, genus_of_cover(specs), cover_degree(specs))


def cover_from_functions(functions: Iterable[RatFunc]) -> CoverData:
    """Splitting cover of the square roots of ``functions``.

    Trivial square roots are dropped and a spec equal to an earlier one is
    discarded, i.e. a dependent pair collapses to the quadratic cover.
    """
    kept: list[QuadCoverSpec] = []
    for f in functions:
        if not f:
            continue
        s = QuadCoverSpec.from_function(f)
        if s.is_trivial or any(k.d_sf == s.d_sf for k in kept):
            continue
        kept.append(s)
    return build_cover(kept)
