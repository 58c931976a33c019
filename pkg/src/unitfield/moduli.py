"""Moduli of a smooth conic plus two lines in the projective plane.

The four points where the lines meet the conic are read as parameters on
a rational parametrization of the conic; the class of the divisor is
determined by ``lambda' = beta + 1/beta - 2`` with ``beta`` their
cross-ratio.

Cross-ratio convention::

    beta(P1, P2, P3, P4) = (P1 - P3)(P2 - P4) / ((P1 - P4)(P2 - P3))

so that swapping P1 and P2 inverts beta.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import isqrt
from typing import Iterable, Sequence

from .errors import DegenerateError, NotRationalError
from .poly import Poly, as_fraction

__all__ = [
    "INF",
    "ProjPoint",
    "fourple",
    "cross_ratio",
    "lambda_prime",
    "lambda_prime_of_beta",
    "class_equal",
    "STABILIZER",
    "apply_perm",
    "stabilizer_orbit",
    "ConicTwoLines",
    "config_from_coeff",
    "conic_parametrization",
    "intersection_fourple",
    "coeff_to_moduli",
    "coeff_to_moduli_closed_form",
    "is_normal_crossing",
    "moduli_record",
]


class _Infinity:
    """The point at infinity of P^1 as a value."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "INF"

    __str__ = lambda self: "inf"  # noqa: E731

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


@dataclass(frozen=True)
class ProjPoint:
    """A point ``(a : b)`` of P^1, stored normalized (``b = 1`` or ``(1 : 0)``)."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        a, b = as_fraction(self.a), as_fraction(self.b)
        if not a and not b:
            raise DegenerateError("(0 : 0) is not a projective point")
        if b:
            a, b = a / b, Fraction(1)
        else:
            a = Fraction(1)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def of(cls, value) -> "ProjPoint":
        if isinstance(value, ProjPoint):
            return value
        if value is INF or value is None or value == "inf":
            return cls(Fraction(1), Fraction(0))
        return cls(as_fraction(value), Fraction(1))

    @property
    def is_infinity(self) -> bool:
        return not self.b

    def value(self):
        return INF if self.is_infinity else self.a

    def __str__(self) -> str:
        return "inf" if self.is_infinity else str(self.a)


def fourple(*values) -> tuple[ProjPoint, ...]:
    if len(values) == 1 and not isinstance(values[0], (int, Fraction, str, ProjPoint)):
        values = tuple(values[0])
    if len(values) != 4:
        raise ValueError("a fourple has exactly four points")
    return tuple(ProjPoint.of(v) for v in values)


def _det(p: ProjPoint, q: ProjPoint) -> Fraction:
    return p.a * q.b - q.a * p.b


def _distinct(f: Sequence[ProjPoint]) -> bool:
    return len(set(f)) == 4


def cross_ratio(f: Sequence[ProjPoint]) -> Fraction:
    """Cross-ratio of four pairwise distinct points (always finite, not 0 or 1)."""
    f = fourple(f)
    if not _distinct(f):
        raise DegenerateError("cross-ratio of a fourple with a repeated point")
    p1, p2, p3, p4 = f
    return (_det(p1, p3) * _det(p2, p4)) / (_det(p1, p4) * _det(p2, p3))


def lambda_prime_of_beta(beta):
    """``beta + 1/beta - 2 = (beta - 1)^2 / beta``; INF at beta in {0, INF}."""
    if beta is INF:
        return INF
    beta = as_fraction(beta)
    if not beta:
        return INF
    return (beta - 1) ** 2 / beta


def lambda_prime(f: Sequence[ProjPoint]) -> Fraction:
    return lambda_prime_of_beta(cross_ratio(f))


def class_equal(f: Sequence, g: Sequence) -> bool:
    """Same unordered couple of unordered couples of points."""
    f, g = fourple(f), fourple(g)

    def shape(x):
        return frozenset((frozenset(x[:2]), frozenset(x[2:])))

    return shape(f) == shape(g)


def _compose(p: tuple, q: tuple) -> tuple:
    return tuple(p[q[i]] for i in range(4))


def _closure(gens: Iterable[tuple]) -> tuple[tuple, ...]:
    elems = {(0, 1, 2, 3)}
    frontier = list(elems)
    gens = list(gens)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = _compose(x, g)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(elems))


# generators (12), (13)(24), (14)(23) written as 0-based index images
STABILIZER = _closure([(1, 0, 2, 3), (2, 3, 0, 1), (3, 2, 1, 0)])


def apply_perm(perm: Sequence[int], f: Sequence) -> tuple[ProjPoint, ...]:
    """``(P_sigma(1), ..., P_sigma(4))``."""
    f = fourple(f)
    return tuple(f[perm[i]] for i in range(4))


def stabilizer_orbit(f: Sequence) -> tuple[tuple[ProjPoint, ...], ...]:
    return tuple(apply_perm(g, f) for g in STABILIZER)


# ---------------------------------------------------------------------------
# Conic plus two lines

Matrix3 = tuple[tuple[Fraction, Fraction, Fraction], ...]
Vec3 = tuple[Fraction, Fraction, Fraction]


def _mat(rows) -> Matrix3:
    return tuple(tuple(as_fraction(x) for x in r) for r in rows)


def _vec(v) -> Vec3:
    return tuple(as_fraction(x) for x in v)


def _det3(m: Matrix3) -> Fraction:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _adj3(m: Matrix3) -> Matrix3:
    def minor(i, j):
        r = [k for k in range(3) if k != i]
        c = [k for k in range(3) if k != j]
        return m[r[0]][c[0]] * m[r[1]][c[1]] - m[r[0]][c[1]] * m[r[1]][c[0]]

    return tuple(tuple((-1) ** (i + j) * minor(j, i) for j in range(3)) for i in range(3))


def _quad(m: Matrix3, u: Sequence, v: Sequence):
    return sum(u[i] * m[i][j] * v[j] for i in range(3) for j in range(3))


def _cross(u: Vec3, v: Vec3) -> Vec3:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


@dataclass(frozen=True)
class ConicTwoLines:
    """Symmetric conic matrix in coordinates (x, y, z) and two linear forms.

    ``param`` optionally fixes a rational parametrization ``s -> (x(s), y(s), z(s))``
    of the conic by quadratic polynomials; ``s = INF`` is the leading coefficients.
    """

    conic: Matrix3
    line2: Vec3
    line3: Vec3
    param: tuple[Poly, Poly, Poly] | None = None

    def __post_init__(self):
        m = _mat(self.conic)
        if any(m[i][j] != m[j][i] for i in range(3) for j in range(3)):
            raise DegenerateError("conic matrix must be symmetric")
        l2, l3 = _vec(self.line2), _vec(self.line3)
        if not any(l2) or not any(l3):
            raise DegenerateError("zero linear form")
        if not any(_cross(l2, l3)):
            raise DegenerateError("the two lines coincide")
        object.__setattr__(self, "conic", m)
        object.__setattr__(self, "line2", l2)
        object.__setattr__(self, "line3", l3)

    @property
    def determinant(self) -> Fraction:
        return _det3(self.conic)


def config_from_coeff(lam) -> ConicTwoLines:
    """Conic ``y^2 = x^2 + lam*x*z + z^2`` with the lines ``z = 0`` and ``x = 0``."""
    lam = as_fraction(lam)
    half = lam / 2
    conic = ((1, 0, half), (0, -1, 0), (half, 0, 1))
    param = (Poly((-1, 0, 1)), Poly((-1, lam, -1)), Poly((lam, -2)))
    return ConicTwoLines(conic, (0, 0, 1), (1, 0, 0), param)


def _find_rational_point(m: Matrix3, bound: int) -> Vec3:
    rng = range(-bound, bound + 1)
    for p in sorted(product(rng, repeat=3), key=lambda v: (sum(map(abs, v)), v)):
        if any(p) and not _quad(m, p, p):
            return _vec(p)
    raise NotRationalError(f"no rational point of height <= {bound} on the conic")


def conic_parametrization(m: Matrix3, base_point: Sequence | None = None, bound: int = 12):
    """Parametrize a smooth conic by projection from a rational point."""
    m = _mat(m)
    if not _det3(m):
        raise DegenerateError("singular conic")
    p0 = _vec(base_point) if base_point is not None else _find_rational_point(m, bound)
    if _quad(m, p0, p0):
        raise DegenerateError("base point is not on the conic")
    basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    for a, b in ((0, 1), (0, 2), (1, 2)):
        A, B = _vec(basis[a]), _vec(basis[b])
        if _det3((p0, A, B)):
            break
    # R(s) = s*A + B; second intersection X = Q(R) p0 - 2 B(p0, R) R
    R = [Poly((B[i], A[i])) for i in range(3)]
    QR = sum((R[i] * R[j] * m[i][j] for i in range(3) for j in range(3)), Poly())
    BpR = sum((R[j] * (p0[i] * m[i][j]) for i in range(3) for j in range(3)), Poly())
    return tuple(QR * p0[i] - BpR * R[i] * 2 for i in range(3))


def _rational_roots_homog(q: Poly) -> list[ProjPoint]:
    """Roots in P^1 of the binary quadratic ``q2 s^2 + q1 s r + q0 r^2``."""
    c = list(q.coeffs) + [Fraction(0)] * (3 - len(q.coeffs))
    q0, q1, q2 = c[0], c[1], c[2]
    if not q2 and not q1:
        # q0 r^2: double root at infinity, or identically zero
        raise DegenerateError("line tangent to the conic (double intersection)")
    if not q2:
        return [ProjPoint.of(-q0 / q1), ProjPoint.of(INF)]
    disc = q1 * q1 - 4 * q2 * q0
    if not disc:
        raise DegenerateError("line tangent to the conic (double intersection)")
    if disc < 0:
        raise NotRationalError("intersection parameters are not rational")
    n, d = disc.numerator, disc.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn != n or rd * rd != d:
        raise NotRationalError("intersection parameters are not rational")
    r = Fraction(rn, rd)
    return [ProjPoint.of((-q1 + r) / (2 * q2)), ProjPoint.of((-q1 - r) / (2 * q2))]


def _pair_key(p: ProjPoint):
    # finite points first, in decreasing order; infinity last
    return (1, 0) if p.is_infinity else (0, -p.a)


def intersection_fourple(c: ConicTwoLines) -> tuple[ProjPoint, ...]:
    """Parameters of (D2 n D1, D3 n D1), each pair in canonical order."""
    if not c.determinant:
        raise DegenerateError("singular conic")
    adj = _adj3(c.conic)
    for line in (c.line2, c.line3):
        if not _quad(adj, line, line):
            raise DegenerateError("line tangent to the conic")
    meet = _cross(c.line2, c.line3)
    if not _quad(c.conic, meet, meet):
        raise DegenerateError("the lines meet on the conic")
    param = c.param if c.param is not None else conic_parametrization(c.conic)
    pts: list[ProjPoint] = []
    for line in (c.line2, c.line3):
        q = sum((param[i] * line[i] for i in range(3)), Poly())
        pair = sorted(_rational_roots_homog(q), key=_pair_key)
        pts.extend(pair)
    if len(set(pts)) != 4:
        raise DegenerateError("intersection points are not distinct")
    return tuple(pts)


def coeff_to_moduli(lam) -> Fraction:
    """lambda' of the configuration with conic coefficient ``lam``."""
    lam = as_fraction(lam)
    if lam * lam == 4:
        raise DegenerateError(f"conic coefficient {lam}: singular conic")
    return lambda_prime(intersection_fourple(config_from_coeff(lam)))


def coeff_to_moduli_closed_form(lam) -> Fraction:
    lam = as_fraction(lam)
    if lam * lam == 4:
        raise DegenerateError(f"conic coefficient {lam}: singular conic")
    return Fraction(16) / (lam * lam - 4)


def is_normal_crossing(c: ConicTwoLines) -> bool:
    """Smooth conic, neither line tangent, and the lines meet off the conic.

    Decided over the algebraic closure, so irrational intersections are fine.
    """
    if not c.determinant:
        return False
    adj = _adj3(c.conic)
    if any(not _quad(adj, ln, ln) for ln in (c.line2, c.line3)):
        return False
    meet = _cross(c.line2, c.line3)
    return bool(_quad(c.conic, meet, meet))


def moduli_record(lam) -> dict:
    """Everything the ``moduli`` subcommand prints for one conic coefficient."""
    lam = as_fraction(lam)
    cfg = config_from_coeff(lam)
    rec: dict = {"lambda_coeff": str(lam), "normal_crossing": is_normal_crossing(cfg)}
    try:
        f = intersection_fourple(cfg)
    except (DegenerateError, NotRationalError) as exc:
        rec.update(fourple=None, beta=None, lambda_prime=None, error=str(exc))
        return rec
    beta = cross_ratio(f)
    rec.update(
        fourple=[str(p) for p in f],
        beta=str(beta),
        lambda_prime=str(lambda_prime_of_beta(beta)),
    )
    return rec
