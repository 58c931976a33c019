"""Solutions of ``y^2 = u1^2 + lam*u1 + u2 + 1`` in S-units u1, u2 and an S-integer y.

This module carries the whole chain of estimates for the equation:

* the auxiliary polynomials ``A``, ``B`` and the resultants ``F = Res_Y(A, B)``,
  ``G = Res_X(A, B)``, each computed twice (closed form and a generic
  Sylvester-determinant oracle),
* the discriminant height bounds and the Euler characteristic of the
  splitting cover,
* the gcd-sum functional with checkers for the two external inequalities
  it feeds (the gcd bound for ``1 - a``, ``1 - b`` and the subsum bound),
* the three-way classification of a solution and the degree bound of the
  corresponding section.

Derivatives are taken with respect to the canonical differential form of
the S-set, see :func:`unitfield.funfield.d_omega`.  The oracle values are
authoritative; the printed closed forms are compared against them and any
difference is reported as a *finding*, never adopted.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from math import comb
from typing import Sequence

from .covers import CoverData, chi_of_lifted_set, cover_from_functions
from .errors import (
    DegenerateError,
    DomainError,
    InvalidInstanceError,
    VanishingSubsumError,
)
from .funfield import (
    INFINITY,
    Dependence,
    Place,
    RatFunc,
    SSet,
    d_omega,
    height,
    is_integer,
    is_unit,
    mult_dependence,
    outside_degree,
    proj_height,
    sqrt_up_to_constant,
    strip_places,
    theta,
    valuation,
)
from .poly import Poly, _fraction_sqrt, irreducible_factors, poly_gcd
from .resultant import UPoly, resultant

__all__ = [
    "TERM_NAMES",
    "CASE_I_BOUND",
    "UnitEquationInstance",
    "QuadPoly",
    "BPoly",
    "validate",
    "poly_A_value",
    "poly_B",
    "b_identity_holds",
    "resultant_F",
    "resultant_G",
    "sylvester_F",
    "sylvester_G",
    "printed_F",
    "printed_G",
    "compare_quadratics",
    "DiscriminantReport",
    "discriminant_bounds",
    "DivisibilityResult",
    "divisibility_check",
    "gcd_sum",
    "CZReport",
    "cz_check",
    "ZannierReport",
    "zannier_check",
    "subsum_cases",
    "SubsumVanishing",
    "DependenceCase",
    "HeightBounded",
    "Classification",
    "height_bound",
    "classify",
    "ChainReport",
    "lemma_ab_chain",
    "CoverBoundReport",
    "cover_bound_check",
    "ForcedUnit",
    "forced_u1",
    "DegreeReport",
    "degree_bound",
]

TERM_NAMES = ("u1^2", "lam*u1", "u2", "1")

# maximal exponent in a dependence relation u1^r u2^s = mu
MAX_RELATION_EXP = 5

_ZERO = RatFunc()
_ONE = RatFunc.const(1)


# ---------------------------------------------------------------------------
# Instances


@dataclass(frozen=True)
class UnitEquationInstance:
    """Data of one equation ``y^2 = u1^2 + lam*u1 + u2 + 1``.

    ``y`` is stored up to a constant: the actual S-integer is
    ``sqrt(y_const) * y``, so ``y_const * y**2`` is the right-hand side.
    Over an algebraically closed ground field the constant is harmless;
    over Q it may be irrational.  ``y`` may be None for instances used
    only to exercise the formula identities (no solution needed).
    """

    S: SSet
    lam: RatFunc
    u1: RatFunc
    u2: RatFunc
    y: RatFunc | None = None
    y_const: Fraction = Fraction(1)
    strict: bool = True

    @classmethod
    def from_units(
        cls, S: SSet, lam: RatFunc, u1: RatFunc, u2: RatFunc, strict: bool = True
    ) -> "UnitEquationInstance":
        """Solve for ``y``; raises InvalidInstanceError when no S-integer fits."""
        rhs = u1 * u1 + lam * u1 + u2 + 1
        if not rhs:
            raise InvalidInstanceError("zero-rhs", "right-hand side vanishes identically")
        root = sqrt_up_to_constant(rhs)
        if root is None:
            raise InvalidInstanceError("not-a-square", "right-hand side is not a square")
        return cls(S, lam, u1, u2, root.root, root.constant, strict)

    @property
    def rhs(self) -> RatFunc:
        return self.u1 * self.u1 + self.lam * self.u1 + self.u2 + 1

    @property
    def terms(self) -> tuple[RatFunc, RatFunc, RatFunc, RatFunc]:
        return (self.u1 * self.u1, self.lam * self.u1, self.u2, _ONE)

    def with_designated(self, designated: Sequence[Place]) -> "UnitEquationInstance":
        return replace(self, S=self.S.with_designated(designated))

    # derivatives, cached per instance (cached_property writes __dict__ directly)
    @cached_property
    def th1(self) -> RatFunc:
        return theta(self.u1, self.S)

    @cached_property
    def th2(self) -> RatFunc:
        return theta(self.u2, self.S)

    @cached_property
    def lam_log(self) -> RatFunc:
        """``lam'/lam``; lam is an S-unit, so this is its theta."""
        return theta(self.lam, self.S)

    @cached_property
    def lam_prime(self) -> RatFunc:
        return d_omega(self.lam, self.S)

    @cached_property
    def F(self) -> "QuadPoly":
        return _resultant_F(self)

    @cached_property
    def G(self) -> "QuadPoly":
        return _resultant_G(self)

    @cached_property
    def h_lam(self) -> int:
        return height(self.lam)

    @cached_property
    def chi(self) -> int:
        return self.S.chi


def validate(inst: UnitEquationInstance) -> UnitEquationInstance:
    """Check every invariant; the first violation raises InvalidInstanceError."""
    if inst.__dict__.get("_validated"):
        return inst
    S = inst.S
    for name, u in (("u1", inst.u1), ("u2", inst.u2)):
        if not u:
            raise InvalidInstanceError(f"zero-{name}", f"{name} is zero")
        if not is_unit(u, S):
            raise InvalidInstanceError(f"non-unit-{name}", f"{name} = {u} is not an S-unit")
    if not inst.lam or inst.lam.is_constant():
        raise InvalidInstanceError("constant-lambda", "lam must be non-constant")
    if not is_unit(inst.lam, S):
        raise InvalidInstanceError(
            "lambda-support", f"zeros/poles of lam = {inst.lam} are not all in S"
        )
    if inst.strict:
        disc = inst.lam * inst.lam - 4
        if not is_unit(disc, S):
            raise InvalidInstanceError(
                "strict-support", "zeros/poles of lam^2 - 4 are not all in S (strict mode)"
            )
    if inst.y is None:
        raise InvalidInstanceError("missing-y", "no y supplied")
    if not inst.y_const:
        raise InvalidInstanceError("zero-y", "y_const must be nonzero")
    if not inst.y:
        raise InvalidInstanceError("zero-y", "y = 0 is excluded")
    if not is_integer(inst.y, S):
        raise InvalidInstanceError("y-not-integer", f"y = {inst.y} has a pole outside S")
    if inst.rhs != inst.y * inst.y * inst.y_const:
        raise InvalidInstanceError("equation-mismatch", "y^2 != u1^2 + lam*u1 + u2 + 1")
    inst.__dict__["_validated"] = True
    return inst


# ---------------------------------------------------------------------------
# The auxiliary polynomials


@dataclass(frozen=True)
class QuadPoly:
    """``c2*X^2 + c1*X + c0`` with rational-function coefficients."""

    c2: RatFunc
    c1: RatFunc
    c0: RatFunc

    def __call__(self, x: RatFunc) -> RatFunc:
        return (self.c2 * x + self.c1) * x + self.c0

    def discriminant(self) -> RatFunc:
        return self.c1 * self.c1 - self.c2 * self.c0 * 4

    @property
    def nondegenerate(self) -> bool:
        return bool(self.c2) and bool(self.c0)

    def scaled(self, k: RatFunc) -> "QuadPoly":
        return QuadPoly(self.c2 * k, self.c1 * k, self.c0 * k)

    def __neg__(self) -> "QuadPoly":
        return QuadPoly(-self.c2, -self.c1, -self.c0)

    def format(self, var: str = "X") -> str:
        return f"({self.c2}) {var}^2 + ({self.c1}) {var} + ({self.c0})"

    __str__ = format


@dataclass(frozen=True)
class BPoly:
    """``B(X, Y) = x2*X^2 + x1*X + y1*Y``."""

    x2: RatFunc
    x1: RatFunc
    y1: RatFunc

    def __call__(self, x: RatFunc, y: RatFunc) -> RatFunc:
        return (self.x2 * x + self.x1) * x + self.y1 * y


def poly_A_value(inst: UnitEquationInstance) -> RatFunc:
    return inst.rhs


def poly_B(inst: UnitEquationInstance) -> BPoly:
    th1, th2, L = inst.th1, inst.th2, inst.lam_log
    return BPoly(th1 * 2, inst.lam * (th1 + L), th2)


def b_identity_holds(inst: UnitEquationInstance) -> bool:
    """``B(u1, u2) == (A(u1, u2))'`` with the right side differentiated directly."""
    return poly_B(inst)(inst.u1, inst.u2) == d_omega(inst.rhs, inst.S)


def _upoly(*coeffs) -> UPoly:
    return UPoly(list(coeffs), _ZERO)


_UZERO = UPoly([], _ZERO)


def sylvester_F(inst: UnitEquationInstance) -> QuadPoly:
    """Res_Y(A, B) from the 2x2 Sylvester determinant (coefficients in K[X])."""
    b = poly_B(inst)
    A_in_Y = [_upoly(_ONE, inst.lam, _ONE), _upoly(_ONE)]
    B_in_Y = [_upoly(_ZERO, b.x1, b.x2), _upoly(b.y1)]
    F = resultant(A_in_Y, B_in_Y, _UZERO)
    return QuadPoly(F.coeff(2), F.coeff(1), F.coeff(0))


def sylvester_G(inst: UnitEquationInstance) -> QuadPoly:
    """Res_X(A, B) from the 4x4 Sylvester determinant (coefficients in K[Y])."""
    b = poly_B(inst)
    A_in_X = [_upoly(_ONE, _ONE), _upoly(inst.lam), _upoly(_ONE)]
    B_in_X = [_upoly(_ZERO, b.y1), _upoly(b.x1), _upoly(b.x2)]
    G = resultant(A_in_X, B_in_X, _UZERO)
    if G.degree > 2:
        raise AssertionError("Res_X(A, B) has degree > 2 in Y")
    return QuadPoly(G.coeff(2), G.coeff(1), G.coeff(0))


def _res_linear(a: tuple, b: tuple) -> tuple:
    """Res of ``a0 + a1*Y`` and ``b0 + b1*Y`` where the a_i, b_i are
    coefficient tuples of polynomials in X: ``a1*b0 - a0*b1``."""
    (a0, a1), (b0, b1) = a, b
    n = max(len(a0) + len(b1), len(a1) + len(b0)) - 1
    out = [_ZERO] * n
    for x, y, sgn in ((a1, b0, 1), (a0, b1, -1)):
        for i, p in enumerate(x):
            for j, q in enumerate(y):
                if p and q:
                    out[i + j] = out[i + j] + p * q * sgn
    return tuple(out)


def _resultant_F(inst: UnitEquationInstance) -> QuadPoly:
    b = poly_B(inst)
    # A = (X^2 + lam X + 1) + 1*Y,  B = (x2 X^2 + x1 X) + y1*Y
    F = _res_linear(((_ONE, inst.lam, _ONE), (_ONE,)), ((_ZERO, b.x1, b.x2), (b.y1,)))
    F = F + (_ZERO,) * (3 - len(F))
    return QuadPoly(F[2], F[1], F[0])


def _resultant_G(inst: UnitEquationInstance) -> QuadPoly:
    """Res_X of two quadratics in X, via the Bezout form
    ``(a2 b0 - a0 b2)^2 - (a2 b1 - a1 b2)(a1 b0 - a0 b1)``; the a_i, b_i are
    linear in Y, stored as (constant, Y-coefficient) pairs."""
    b = poly_B(inst)
    a2, a1, a0 = (_ONE, _ZERO), (inst.lam, _ZERO), (_ONE, _ONE)
    b2, b1, b0 = (b.x2, _ZERO), (b.x1, _ZERO), (_ZERO, b.y1)

    def mul(p, q):
        return (p[0] * q[0], p[0] * q[1] + p[1] * q[0], p[1] * q[1])

    def sub(p, q):
        return tuple(x - y for x, y in zip(p, q))

    u = sub(mul(a2, b0), mul(a0, b2))
    v = sub(mul(a2, b1), mul(a1, b2))
    w = sub(mul(a1, b0), mul(a0, b1))
    # u, v, w have degree <= 1 in Y (third slot zero); square and multiply
    res = sub(mul(u[:2], u[:2]), mul(v[:2], w[:2]))
    return QuadPoly(res[2], res[1], res[0])


def resultant_F(inst: UnitEquationInstance) -> QuadPoly:
    """Res_Y(A, B), a quadratic in X (cached on the instance)."""
    return inst.F


def resultant_G(inst: UnitEquationInstance) -> QuadPoly:
    """Res_X(A, B), a quadratic in Y (cached on the instance).

    The fast path is the Bezout form of the resultant of two quadratics;
    :func:`sylvester_G` is the independent determinant oracle.
    """
    return inst.G


def printed_F(inst: UnitEquationInstance) -> QuadPoly:
    th1, th2, L, lam = inst.th1, inst.th2, inst.lam_log, inst.lam
    return QuadPoly(th1 * 2 - th2, (th1 - th2 + L) * lam, -th2)


def printed_G(inst: UnitEquationInstance) -> QuadPoly:
    th1, th2, L, lam = inst.th1, inst.th2, inst.lam_log, inst.lam
    lam2 = lam * lam
    lead = th1 * 2 - th2
    c1 = th1 * th1 * (8 - lam2) + th1 * th2 * (lam2 - 4) + lam2 * L * (L - th2)
    c0 = th1 * th1 * (4 - lam2) + lam2 * L * L
    return QuadPoly(lead * lead, c1, c0)


def compare_quadratics(oracle: QuadPoly, printed: QuadPoly) -> str:
    """``"equal"``, ``"negated"`` or ``"drift"``."""
    if oracle == printed:
        return "equal"
    if oracle == -printed:
        return "negated"
    return "drift"


# ---------------------------------------------------------------------------
# Discriminants


def printed_disc_F(inst: UnitEquationInstance, corrected: bool = False) -> RatFunc:
    """The printed discriminant of F; ``corrected`` reads the last square as
    ``(lam*th1 + lam')^2`` instead of ``(lam*th1 + lam'^2)^2``."""
    th1, th2, lam, lp = inst.th1, inst.th2, inst.lam, inst.lam_prime
    lam2 = lam * lam
    last = lp if corrected else lp * lp
    return (
        th2 * th2 * (lam2 - 4)
        + th2 * (th1 * 8 - th1 * lam2 * 2 - lam * lp * 2)
        + (lam * th1 + last) ** 2
    )


def printed_disc_G(inst: UnitEquationInstance, join: str = "product") -> RatFunc:
    """The printed discriminant of G.

    One operator between two terms of the middle bracket is missing; ``join``
    reads the gap as ``"product"`` (juxtaposition) or ``"sum"``.
    """
    th1, th2, lam, lp = inst.th1, inst.th2, inst.lam, inst.lam_prime
    lam2 = lam * lam
    first = th2 * th2 * (
        th1 * th1 * lam2 * (4 - lam2) + th1 * lam * lp * (8 - lam2 * 2) + lp * lp * (lam2 - 4)
    )
    left = th1**3 * lam2 * (4 - lam2)
    right = th1 * th1 * lam * lp * (lam2 - 8)
    gap = left * right if join == "product" else left + right
    middle = th2 * 2 * (gap + th1 * lp * lp * (lam2 + 4) - lam * lp)
    last = th1**4 * lam2 - th1 * th1 * lam2 * lp * lp * 2 + lp**4
    return first + middle + last


def _h(f: RatFunc) -> int:
    return height(f) if f else 0


@dataclass(frozen=True)
class DiscriminantReport:
    disc_F: RatFunc
    disc_G: RatFunc
    height_F: int
    height_G: int
    bound_F: int
    bound_G: int
    ok_F: bool
    ok_G: bool
    same_square_class: bool
    findings: tuple[str, ...]


def discriminant_bounds(inst: UnitEquationInstance) -> DiscriminantReport:
    F, G = resultant_F(inst), resultant_G(inst)
    dF, dG = F.discriminant(), G.discriminant()
    chi, hl = inst.chi, inst.h_lam
    bF, bG = 6 * chi + 4 * hl, 10 * chi + 8 * hl
    findings = []
    if printed_disc_F(inst) != dF:
        if printed_disc_F(inst, corrected=True) == dF:
            findings.append("typo: printed Disc(F) has lam'^2 where lam' matches the oracle")
        else:
            findings.append("drift: printed Disc(F) differs from b^2 - 4ac of the oracle F")
    for join in ("product", "sum"):
        if printed_disc_G(inst, join) != dG:
            findings.append(
                f"drift: printed Disc(G) ({join} reading) differs from b^2 - 4ac of the oracle G"
            )
    # Disc(G) = (lam*th1 - lam')^2 Disc(F): both quadratics split over one field
    w = inst.lam * inst.th1 - inst.lam_prime
    same = dG == w * w * dF
    return DiscriminantReport(
        dF, dG, _h(dF), _h(dG), bF, bG, _h(dF) <= bF, _h(dG) <= bG, same, tuple(findings)
    )


# ---------------------------------------------------------------------------
# Divisibility of F(u1), G(u2) by y


@dataclass(frozen=True)
class DivisibilityResult:
    ok: bool
    failed_poly: str | None = None
    place: Place | None = None

    def __bool__(self) -> bool:
        return self.ok


def _divides_outside(y: RatFunc, value: RatFunc, S: SSet) -> Place | None | bool:
    """True if v(value) >= v(y) at every finite place outside S, else a witness."""
    if not value:
        return True
    y_out, _ = strip_places(y.num, S.finite)
    if y_out.degree < 1:
        return True
    if not is_integer(value, S):
        raise AssertionError("F(u1)/G(u2) should be S-integers")
    v_out, _ = strip_places(value.num, S.finite)
    if not (v_out % y_out):
        return True
    for q, _ in irreducible_factors(y_out):
        v = Place(q)
        if valuation(value, v) < valuation(y, v):
            return v
    raise AssertionError("divisibility failed but no witness place found")


def divisibility_check(inst: UnitEquationInstance) -> DivisibilityResult:
    """``y | F(u1)`` and ``y | G(u2)`` in the ring of S-integers."""
    validate(inst)
    for name, value in (
        ("F(u1)", resultant_F(inst)(inst.u1)),
        ("G(u2)", resultant_G(inst)(inst.u2)),
    ):
        res = _divides_outside(inst.y, value, inst.S)
        if res is not True:
            return DivisibilityResult(False, name, res)
    return DivisibilityResult(True)


# ---------------------------------------------------------------------------
# gcd-sum and the two external inequalities


def gcd_sum(a: RatFunc, b: RatFunc, S: SSet) -> int:
    """Weighted sum over places outside S of ``min(v(1 - a), v(1 - b))``."""
    for x in (a, b):
        if not is_unit(x, S):
            raise DomainError(f"{x} is not an S-unit")
        if x == 1:
            raise DegenerateError("gcd-sum with an argument equal to 1")
    pa, _ = strip_places((1 - a).num, S.finite)
    pb, _ = strip_places((1 - b).num, S.finite)
    return poly_gcd(pa, pb).degree


def _gcd_sum_ext(a: RatFunc, b: RatFunc, S: SSet) -> int | None:
    """gcd_sum allowing a or b == 1 (v(0) = +inf); None means +inf."""
    if a == 1 and b == 1:
        return None
    if a == 1:
        return outside_degree((1 - b).num, S)
    if b == 1:
        return outside_degree((1 - a).num, S)
    return gcd_sum(a, b, S)


@dataclass(frozen=True)
class CZReport:
    branch: str
    gcd_sum: int
    h_a: int
    h_b: int
    chi: int
    relation: Dependence | None
    bound: str
    holds: bool


def cz_check(a: RatFunc, b: RatFunc, S: SSet) -> CZReport:
    """Check the gcd bound for S-units a, b (not both constant).

    Independent pair: ``gcd^3 <= 54 H(a) H(b) chi`` (cube of the real bound,
    compared in integers).  Dependent pair ``a^r b^s = mu``: zero gcd-sum
    when ``mu != 1``, else ``gcd <= min(H(a)/|s|, H(b)/|r|)``.
    """
    if a.is_constant() and b.is_constant():
        raise DomainError("at least one of a, b must be non-constant")
    g = gcd_sum(a, b, S)
    ha, hb, chi = height(a), height(b), S.chi
    rel = mult_dependence(a, b, S)
    if rel is None:
        rhs = 54 * ha * hb * chi
        return CZReport("independent", g, ha, hb, chi, None, f"g^3 <= {rhs}", g**3 <= rhs)
    if rel.mu != 1:
        return CZReport("dependent-mu-ne-1", g, ha, hb, chi, rel, "g == 0", g == 0)
    terms = []
    if rel.s:
        terms.append(Fraction(ha, abs(rel.s)))
    if rel.r:
        terms.append(Fraction(hb, abs(rel.r)))
    bound = min(terms)
    return CZReport("dependent-mu-1", g, ha, hb, chi, rel, f"g <= {bound}", g <= bound)


@dataclass(frozen=True)
class ZannierReport:
    m: int
    lhs: int
    proj_height: int
    chi: int
    rhs: int
    holds: bool


def _probe_points(terms: Sequence[RatFunc], k: int = 3) -> list[int]:
    pts, x = [], 7
    while len(pts) < k:
        if all(f.den(x) for f in terms):
            pts.append(x)
        x += 4
    return pts


def first_vanishing_subset(terms: Sequence[RatFunc], proper: bool = False):
    """Lexicographically first vanishing nonempty subset (index tuple) or None.

    A subset sum that is nonzero at some rational point is nonzero; only the
    subsets vanishing at every probe point get the exact check.
    """
    n = len(terms)
    subsets = sorted(
        c for k in range(1, n + (0 if proper else 1)) for c in combinations(range(n), k)
    )
    pts = _probe_points(terms)
    vals = [[f(x) for x in pts] for f in terms]
    for c in subsets:
        if any(sum(vals[i][k] for i in c) for k in range(len(pts))):
            continue
        acc = _ZERO
        for i in c:
            acc = acc + terms[i]
        if not acc:
            return c
    return None


def zannier_check(thetas: Sequence[RatFunc], S: SSet) -> ZannierReport:
    """``sum_{v not in S} v(sum theta) >= H(theta_1 : ... : theta_m) - C(m,2) chi``."""
    m = len(thetas)
    if m < 2:
        raise DomainError("need at least two units")
    for th in thetas:
        if not is_unit(th, S):
            raise DomainError(f"{th} is not an S-unit")
    bad = first_vanishing_subset(thetas)
    if bad is not None:
        raise VanishingSubsumError(bad)
    total = _ZERO
    for th in thetas:
        total = total + th
    lhs = outside_degree(total.num, S)
    ph = proj_height(thetas)
    chi = S.chi
    rhs = ph - comb(m, 2) * chi
    return ZannierReport(m, lhs, ph, chi, rhs, lhs >= rhs)


# ---------------------------------------------------------------------------
# Classification


def subsum_cases(inst: UnitEquationInstance) -> tuple[str, ...] | None:
    """Names of the first vanishing proper subsum of ``u1^2 + lam*u1 + u2 + 1``."""
    c = first_vanishing_subset(inst.terms, proper=True)
    return None if c is None else tuple(TERM_NAMES[i] for i in c)


def height_bound(chi: int, h_lam: int, lam_coeff: int = 16) -> int:
    """``2^12 (58 chi + 28 H(lam)) + lam_coeff * H(lam)``."""
    return 2**12 * (58 * chi + 28 * h_lam) + lam_coeff * h_lam


CASE_I_BOUND = height_bound


@dataclass(frozen=True)
class SubsumVanishing:
    subset: tuple[str, ...]
    kind: str = field(default="i", init=False)


@dataclass(frozen=True)
class DependenceCase:
    r: int
    s: int
    mu: Fraction
    kind: str = field(default="ii", init=False)


@dataclass(frozen=True)
class HeightBounded:
    bound: int
    h1: int
    h2: int
    slack: Fraction
    kind: str = field(default="iii", init=False)


@dataclass(frozen=True)
class Classification:
    cases: tuple
    findings: tuple[str, ...]

    @property
    def kinds(self) -> tuple[str, ...]:
        return tuple(c.kind for c in self.cases)

    @property
    def is_counterexample(self) -> bool:
        return not self.cases

    def to_dict(self) -> dict:
        out = []
        for c in self.cases:
            if isinstance(c, SubsumVanishing):
                out.append({"kind": "i", "subset": list(c.subset)})
            elif isinstance(c, DependenceCase):
                out.append({"kind": "ii", "r": c.r, "s": c.s, "mu": str(c.mu)})
            else:
                out.append(
                    {"kind": "iii", "bound": c.bound, "h1": c.h1, "h2": c.h2, "slack": str(c.slack)}
                )
        return {"cases": out, "findings": list(self.findings)}


def classify(inst: UnitEquationInstance) -> Classification:
    """Every satisfied case of the trichotomy: vanishing subsum, small
    dependence relation, bounded height.  An empty case set would be a
    counterexample and is returned as such, never dropped.
    """
    validate(inst)
    cases: list = []
    findings: list[str] = []
    sub = subsum_cases(inst)
    if sub is not None:
        cases.append(SubsumVanishing(sub))
    rel = mult_dependence(inst.u1, inst.u2, inst.S, max_exp=MAX_RELATION_EXP)
    if rel is not None:
        cases.append(DependenceCase(rel.r, rel.s, rel.mu))
    h1, h2 = height(inst.u1), height(inst.u2)
    bound = height_bound(inst.chi, inst.h_lam)
    if max(h1, h2) <= bound:
        cases.append(HeightBounded(bound, h1, h2, Fraction(max(h1, h2), bound)))
    alt = height_bound(inst.chi, inst.h_lam, lam_coeff=1)
    findings.append(
        f"bound-variant: with 1*H(lam) the height bound is {alt} "
        f"({'holds' if max(h1, h2) <= alt else 'fails'}); 16*H(lam) used"
    )
    if not cases:
        findings.append("potential counterexample: no case applies")
    return Classification(tuple(cases), tuple(findings))


# ---------------------------------------------------------------------------
# Cover and Euler characteristic


def _zero_places(f: RatFunc) -> set[Place]:
    return {Place(q) for q, _ in irreducible_factors(f.num)}


def _enlarged_set(inst: UnitEquationInstance, F: QuadPoly, G: QuadPoly) -> SSet:
    extra: set[Place] = set()
    for c in (F.c2, F.c0, G.c2, G.c0):
        extra |= _zero_places(c)
    return inst.S.union(extra)


@dataclass(frozen=True)
class CoverBoundReport:
    skipped: bool
    reason: str | None
    U: SSet | None
    cover: CoverData | None
    chi_U: int | None
    bound_53: int
    bound_58: int
    holds_53: bool
    holds_58: bool

    def to_dict(self) -> dict:
        return {
            "skipped": self.skipped,
            "reason": self.reason,
            "U_size": None if self.U is None else self.U.size,
            "cover": None if self.cover is None else self.cover.to_dict(),
            "chi_U": self.chi_U,
            "bound_53": self.bound_53,
            "bound_58": self.bound_58,
            "holds_53": self.holds_53,
            "holds_58": self.holds_58,
        }


def cover_bound_check(inst: UnitEquationInstance) -> CoverBoundReport:
    """``chi_U(D) <= 53 chi_S + 28 H(lam)`` for the splitting cover of F*G."""
    F, G = resultant_F(inst), resultant_G(inst)
    b53 = 53 * inst.chi + 28 * inst.h_lam
    b58 = 58 * inst.chi + 28 * inst.h_lam
    if not (F.nondegenerate and G.nondegenerate):
        return CoverBoundReport(
            True, "leading or constant coefficient of F or G vanishes",
            None, None, None, b53, b58, True, True,
        )
    U = _enlarged_set(inst, F, G)
    cover = cover_from_functions([F.discriminant(), G.discriminant()])
    chi_U = chi_of_lifted_set(U.places, cover.specs)
    return CoverBoundReport(False, None, U, cover, chi_U, b53, b58, chi_U <= b53, chi_U <= b58)


# ---------------------------------------------------------------------------
# The chain through the roots of F and G (split regime only)


@dataclass(frozen=True)
class ChainReport:
    regime: str
    U_size: int | None = None
    chi_U: int | None = None
    sum_vy: int | None = None
    pair: tuple[int, int] | None = None
    gcd_value: int | None = None
    vy_up: bool | None = None
    hab_gap: int | None = None
    hab_bound: int | None = None
    hab: bool | None = None
    vy_down_checked: bool = False
    zannier_lhs: int | None = None
    zannier_rhs: int | None = None
    zannier: bool | None = None
    vy_down_printed: bool | None = None
    vab_printed: bool | None = None
    dependence: Dependence | None = None
    findings: tuple[str, ...] = ()

    @property
    def violations(self) -> tuple[str, ...]:
        out = []
        for name in ("vy_up", "hab", "zannier"):
            if getattr(self, name) is False:
                out.append(name)
        return tuple(out)


def _rational_roots(q: QuadPoly) -> tuple[RatFunc, RatFunc] | None:
    disc = q.discriminant()
    if not disc:
        r = -q.c1 / (q.c2 * 2)
        return r, r
    root = sqrt_up_to_constant(disc)
    if root is None:
        return None
    c = _fraction_sqrt(root.constant)
    if c is None:
        return None
    w = root.root * c
    two_a = q.c2 * 2
    return (-q.c1 + w) / two_a, (-q.c1 - w) / two_a


def lemma_ab_chain(inst: UnitEquationInstance) -> ChainReport:
    """Roots alpha of F and beta of G, the units a = u1/alpha, b = u2/beta,
    and the inequalities linking gcd_sum(a, b) to the zeros of y.

    Runs only when both discriminants are squares in Q(t); then the
    splitting cover is trivial and everything lives on the base.
    """
    validate(inst)
    F, G = resultant_F(inst), resultant_G(inst)
    if not (F.nondegenerate and G.nondegenerate):
        return ChainReport(
            "degenerate-coefficients",
            dependence=mult_dependence(inst.u1, inst.u2, inst.S),
        )
    ra, rb = _rational_roots(F), _rational_roots(G)
    if ra is None or rb is None:
        return ChainReport("regime-not-supported")
    U = _enlarged_set(inst, F, G)
    chi_U = U.chi
    findings: list[str] = []
    for r in ra + rb:
        if not is_unit(r, U):
            findings.append(f"root {r} is not a U-unit")
    sum_vy = outside_degree(inst.y.num, U)
    hu = max(height(inst.u1), height(inst.u2))
    hab_bound = 32 * inst.chi + 8 * inst.h_lam
    best = None
    for i, j in product(range(2), range(2)):
        a, b = inst.u1 / ra[i], inst.u2 / rb[j]
        g = _gcd_sum_ext(a, b, U)
        gap = abs(max(height(a), height(b)) - hu)
        key = (float("inf") if g is None else g, -gap)
        if best is None or key > best[0]:
            best = (key, (i, j), g, gap, a, b)
    _, pair, g, gap, a, b = best
    vy_up = g is None or 4 * g >= sum_vy
    rep = dict(
        regime="split",
        U_size=U.size,
        chi_U=chi_U,
        sum_vy=sum_vy,
        pair=pair,
        gcd_value=g,
        vy_up=vy_up,
        hab_gap=gap,
        hab_bound=hab_bound,
        hab=gap <= hab_bound,
    )
    if subsum_cases(inst) is None and first_vanishing_subset(inst.terms) is None:
        # subsum bound applied to y^2 = u1^2 + lam*u1 + u2 + 1 on U
        zl = 2 * sum_vy
        zr = proj_height(inst.terms) - 6 * chi_U
        rep.update(vy_down_checked=True, zannier_lhs=zl, zannier_rhs=zr, zannier=zl >= zr)
        vy_down = sum_vy >= hu - 6 * chi_U
        rep["vy_down_printed"] = vy_down
        if not vy_down:
            findings.append(
                "printed lower bound for sum v(y) fails; the subsum bound only gives it for y^2"
            )
        if g is not None:
            hab_ab = max(height(a), height(b))
            vab = 4 * g >= hab_ab - 38 * inst.chi - 8 * inst.h_lam
            rep["vab_printed"] = vab
            if not vab:
                findings.append("printed gcd lower bound in terms of H(a), H(b) fails")
    return ChainReport(**rep, findings=tuple(findings))


# ---------------------------------------------------------------------------
# Forced u1 when the constant term of G vanishes


@dataclass(frozen=True)
class ForcedUnit:
    """``theta_{u1} = rho`` has the unique solution ``exponents``; ``-rho`` gives
    the negated vector."""

    exponents: tuple[int, ...]
    rho: RatFunc
    places: tuple[Place, ...]


def _solve_rational(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Exact least-structure solve; None if inconsistent, error if not unique."""
    n = len(rows[0]) if rows else 0
    M = [list(r) + [b] for r, b in zip(rows, rhs)]
    piv_cols = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(M)) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        piv_cols.append(c)
        r += 1
    if any(row[-1] for row in M[r:]):
        return None
    if len(piv_cols) < n:
        raise AssertionError("logarithmic derivatives of distinct places are independent")
    sol = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        sol[c] = M[i][-1]
    return sol


def forced_u1(S: SSet, lam: RatFunc) -> ForcedUnit | None:
    """Solve ``(u1'/u1)^2 = -lam^2/(4 - lam^2) (lam'/lam)^2`` for the exponent
    vector of u1 over the finite places of S (u1 determined up to a constant).
    """
    if lam.is_constant():
        raise DomainError("lam must be non-constant")
    if not is_unit(lam, S):
        raise DomainError("lam must be an S-unit")
    if not is_unit(lam * lam - 4, S):
        raise DomainError("S must contain the zeros and poles of lam^2 - 4")
    L = theta(lam, S)
    ratio = (lam * lam * L * L) / (lam * lam - 4)
    root = sqrt_up_to_constant(ratio)
    if root is None:
        return None
    c = _fraction_sqrt(root.constant)
    if c is None:
        return None
    rho = root.root * c
    if not is_integer(rho, S):
        return None
    # theta_u = m * sum e_i p_i'/p_i  ==>  sum e_i p_i' (P/p_i) = rho * P / m
    places = S.finite
    P = Poly((1,))
    for v in places:
        P = P * v.min_poly
    target = rho * RatFunc.from_poly(P) / RatFunc.from_poly(S.m)
    if target.den.degree:
        return None
    cols = [(v.min_poly.derivative() * (P // v.min_poly)) for v in places]
    deg = max([target.num.degree] + [q.degree for q in cols]) + 1

    def coeff(p: Poly, k: int) -> Fraction:
        return p.coeffs[k] if k < len(p.coeffs) else Fraction(0)

    rows = [[coeff(q, k) for q in cols] for k in range(deg)]
    rhs = [coeff(target.num, k) for k in range(deg)]
    sol = _solve_rational(rows, rhs)
    if sol is None or any(x.denominator != 1 for x in sol):
        return None
    return ForcedUnit(tuple(int(x) for x in sol), rho, places)


# ---------------------------------------------------------------------------
# Degree of the section


@dataclass(frozen=True)
class DegreeReport:
    degree_bound: int
    c1: int
    c2: int
    bound: int
    holds: bool
    dependent_claim: bool | None
    findings: tuple[str, ...]


def degree_bound(inst: UnitEquationInstance) -> DegreeReport:
    """``H(u1) + H(y) <= C1 chi + C2`` with ``C1 = 2^14*58``, ``C2 = 2^14*28*(H(lam)+1)``.

    The H(lam)-dependence of C2 is this artifact's sound choice; it is
    flagged in every report.
    """
    validate(inst)
    deg = height(inst.u1) + height(inst.y)
    c1 = 2**14 * 58
    c2 = 2**14 * 28 * (inst.h_lam + 1)
    bound = c1 * inst.chi + c2
    findings = ["C2 taken as 2^14*28*(H(lam)+1): constant depends on the height of lam"]
    dep_claim = None
    if mult_dependence(inst.u1, inst.u2, inst.S, max_exp=MAX_RELATION_EXP) is not None:
        dep_claim = deg <= 20
        if not dep_claim:
            findings.append(f"dependent units but H(u1) + H(y) = {deg} > 20")
    return DegreeReport(deg, c1, c2, bound, deg <= bound, dep_claim, tuple(findings))
