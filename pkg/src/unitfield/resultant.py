"""Generic resultants over a commutative coefficient ring.

Used as the independent oracle for the auxiliary polynomials: entries only
need ``+``, ``-`` and ``*``.  Polynomials are given as ascending coefficient
lists whose length fixes the *formal* degree, so a vanishing leading
coefficient does not silently change the Sylvester matrix size.
"""

from __future__ import annotations

from itertools import permutations
from typing import Callable, Sequence

__all__ = ["UPoly", "sylvester_matrix", "determinant", "resultant"]


class UPoly:
    """Univariate polynomial with coefficients in an arbitrary commutative ring."""

    __slots__ = ("coeffs", "zero")

    def __init__(self, coeffs: Sequence, zero):
        cs = list(coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)
        self.zero = zero

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.zero

    def _lift(self, other) -> "UPoly":
        return other if isinstance(other, UPoly) else UPoly([other], self.zero)

    def __add__(self, other) -> "UPoly":
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UPoly([self.coeff(i) + other.coeff(i) for i in range(n)], self.zero)

    __radd__ = __add__

    def __neg__(self) -> "UPoly":
        return UPoly([-c for c in self.coeffs], self.zero)

    def __sub__(self, other) -> "UPoly":
        return self + (-self._lift(other))

    def __mul__(self, other) -> "UPoly":
        other = self._lift(other)
        if not self.coeffs or not other.coeffs:
            return UPoly([], self.zero)
        res = [self.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                if not _is_zero(b):
                    res[i + j] = res[i + j] + a * b
        return UPoly(res, self.zero)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = self.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __repr__(self) -> str:
        return f"UPoly({list(self.coeffs)!r})"


def _is_zero(x) -> bool:
    return not x


def sylvester_matrix(p: Sequence, q: Sequence, zero) -> list[list]:
    """Sylvester matrix of ``p`` (formal degree len(p)-1) and ``q``."""
    m, n = len(p) - 1, len(q) - 1
    size = m + n
    rows = []
    pd = list(reversed(p))
    qd = list(reversed(q))
    for i in range(n):
        rows.append([zero] * i + pd + [zero] * (size - i - m - 1))
    for i in range(m):
        rows.append([zero] * i + qd + [zero] * (size - i - n - 1))
    return rows


def _perm_sign(perm: Sequence[int]) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def determinant(matrix: Sequence[Sequence], zero) -> object:
    """Leibniz expansion; skips permutations that hit a zero entry."""
    n = len(matrix)
    total = zero
    for perm in permutations(range(n)):
        term = None
        for i in range(n):
            e = matrix[i][perm[i]]
            if _is_zero(e):
                term = None
                break
            term = e if term is None else term * e
        if term is None:
            continue
        total = total + term if _perm_sign(perm) > 0 else total - term
    return total


def resultant(p: Sequence, q: Sequence, zero, det: Callable | None = None):
    return (det or determinant)(sylvester_matrix(p, q, zero), zero)
