"""Exhaustive desk-scale search for solutions of the unit equation.

Units are ``c * prod(p_j ** e_j)`` over the finite places of S, with ``c`` from
the constant pool and ``|e_j| <= exponent_bound``.  The order of the grid is
lexicographic in ``(c1, e1, c2, e2)`` with constants sorted by value.

Most pairs are rejected by a modular filter: if ``RHS = c * g**2`` then for
integer points s, t outside S the product ``RHS(s) * RHS(t)`` is a
rational square, so its reduction modulo any prime p not dividing the data
is a square (or zero).  The filter is vectorized over u2 with numpy.  Pairs
that survive every test get the exact square-root test in Q(t).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterator

import numpy as np

from ..errors import ConfigError
from ..funfield import RatFunc, SSet, height, is_unit, sqrt_up_to_constant
from ..poly import Poly
from ..serialize import format_expr
from ..vojta import (
    UnitEquationInstance,
    classify,
    degree_bound,
    divisibility_check,
)
from .config import SearchConfig

__all__ = ["SearchStats", "Searcher", "search", "solution_record", "grid_size"]

N_POINTS = 8
N_PRIMES = 3
_PRIME_START = 30011


@dataclass
class SearchStats:
    pairs: int = 0
    filter_passed: int = 0
    zero_rhs: int = 0
    solutions: int = 0

    def add(self, other: "SearchStats") -> None:
        self.pairs += other.pairs
        self.filter_passed += other.filter_passed
        self.zero_rhs += other.zero_rhs
        self.solutions += other.solutions

    def to_dict(self) -> dict:
        return {
            "pairs": self.pairs,
            "filter_passed": self.filter_passed,
            "zero_rhs": self.zero_rhs,
            "solutions": self.solutions,
        }


def grid_size(config: SearchConfig) -> int:
    n_units = len(config.constant_pool) * (2 * config.exponent_bound + 1) ** len(config.S.finite)
    return n_units * n_units


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _mod(x: Fraction, p: int) -> int | None:
    """x mod p, or None if p divides numerator or denominator."""
    if x.numerator % p == 0 or x.denominator % p == 0:
        return None
    return x.numerator * pow(x.denominator, -1, p) % p


class Searcher:
    """Precomputed grid and filter tables for one configuration."""

    def __init__(self, config: SearchConfig):
        self.config = config
        S = config.S
        if config.strict and not is_unit(config.lam * config.lam - 4, S):
            raise ConfigError("strict mode: S must contain the zeros and poles of lam^2 - 4")
        if not is_unit(config.lam, S):
            raise ConfigError("lam must be an S-unit")
        cap = config.grid_cap
        if grid_size(config) > cap:
            raise ConfigError(
                f"grid of {grid_size(config)} candidate pairs exceeds the cap {cap}"
            )
        self.places = S.finite
        self.constants = tuple(sorted(config.constant_pool))
        B = config.exponent_bound
        self.exps = tuple(product(range(-B, B + 1), repeat=len(self.places)))
        self.n_units = len(self.constants) * len(self.exps)
        self._units: dict[int, RatFunc] = {}
        self._build_tables()

    # -- grid indexing

    def unit_key(self, idx: int) -> tuple[Fraction, tuple[int, ...]]:
        ci, ei = divmod(idx, len(self.exps))
        return self.constants[ci], self.exps[ei]

    def unit(self, idx: int) -> RatFunc:
        u = self._units.get(idx)
        if u is None:
            c, e = self.unit_key(idx)
            u = build_unit(c, e, self.places)
            self._units[idx] = u
        return u

    # -- modular filter tables

    def _build_tables(self) -> None:
        lam = self.config.lam
        pts: list[int] = []
        # positive points only: symmetric pairs +-k tell even functions nothing
        k = 3
        while len(pts) < N_POINTS:
            if all(v.min_poly(k) != 0 for v in self.places):
                pts.append(k)
            k += 1
        self.points = tuple(pts)
        place_vals = [[v.min_poly(x) for x in pts] for v in self.places]
        lam_vals = [lam(x) for x in pts]
        B = self.config.exponent_bound
        E = np.array(self.exps, dtype=np.int64).reshape(len(self.exps), len(self.places))
        tables = []
        p = _PRIME_START
        while len(tables) < N_PRIMES:
            p += 2
            if not _is_prime(p):
                continue
            cm = [_mod(c, p) for c in self.constants]
            pv = [[_mod(Fraction(x), p) for x in row] for row in place_vals]
            lv = [_mod(Fraction(x), p) for x in lam_vals]
            if None in cm or None in lv or any(None in row for row in pv):
                continue
            # unit values at the points, shape (n_units, n_points)
            VE = np.ones((len(self.exps), len(pts)), dtype=np.int64)
            for j, row in enumerate(pv):
                pw = np.array(
                    [[pow(x, e, p) for x in row] for e in range(-B, B + 1)], dtype=np.int64
                )
                VE = VE * pw[E[:, j] + B] % p
            V = (np.array(cm, dtype=np.int64)[:, None, None] * VE[None]) % p
            V = V.reshape(self.n_units, len(pts))
            L = np.array(lv, dtype=np.int64)
            A1 = (V * V % p + L * V % p + 1) % p
            squares = np.zeros(p, dtype=bool)
            squares[(np.arange(p, dtype=np.int64) ** 2) % p] = True
            tables.append((p, V, A1, squares))
        self.tables = tables

    def candidates(self, i: int) -> np.ndarray:
        """Indices j such that (u1, u2) = (unit i, unit j) passes every test."""
        rows = np.arange(self.n_units)
        for p, V, A1, squares in self.tables:
            a = A1[i]
            # consecutive products, so an accidental zero only blinds two tests
            prev = (a[0] + V[rows, 0]) % p
            for k in range(1, len(self.points)):
                rk = (a[k] + V[rows, k]) % p
                ok = squares[prev * rk % p]
                rows, prev = rows[ok], rk[ok]
                if not len(rows):
                    return rows
        return rows

    # -- exact stage

    def scan(self, u1_indices) -> tuple[list[dict], SearchStats]:
        stats = SearchStats()
        records = []
        lam = self.config.lam
        for i in u1_indices:
            stats.pairs += self.n_units
            cand = self.candidates(i)
            stats.filter_passed += len(cand)
            if not len(cand):
                continue
            u1 = self.unit(i)
            a = u1 * u1 + lam * u1 + 1
            for j in cand.tolist():
                rhs = a + self.unit(j)
                if not rhs:
                    stats.zero_rhs += 1
                    continue
                root = sqrt_up_to_constant(rhs)
                if root is None:
                    continue
                stats.solutions += 1
                records.append(solution_record(self, i, j))
        return records, stats


def build_unit(c: Fraction, exps, places) -> RatFunc:
    num, den = Poly((c,)), Poly((1,))
    for v, e in zip(places, exps):
        if e > 0:
            num = num * v.min_poly**e
        elif e < 0:
            den = den * v.min_poly ** (-e)
    return RatFunc(num, den)


def _key(searcher: Searcher, i: int, j: int) -> dict:
    c1, e1 = searcher.unit_key(i)
    c2, e2 = searcher.unit_key(j)
    return {"c1": str(c1), "e1": list(e1), "c2": str(c2), "e2": list(e2)}


def solution_record(searcher: Searcher, i: int, j: int) -> dict:
    """Everything a report stores about one solution, recomputed from scratch."""
    cfg = searcher.config
    u1, u2 = searcher.unit(i), searcher.unit(j)
    inst = UnitEquationInstance.from_units(cfg.S, cfg.lam, u1, u2, strict=cfg.strict)
    cls = classify(inst)
    div = divisibility_check(inst)
    deg = degree_bound(inst)
    F, G = inst.F, inst.G
    violations = []
    if cls.is_counterexample:
        violations.append("unclassified")
    if not div.ok:
        violations.append(f"divisibility: {div.failed_poly} at {div.place}")
    if not deg.holds:
        violations.append("degree-bound")
    h1, h2 = height(u1), height(u2)
    cases = cls.to_dict()["cases"]
    case_bound = next((c["bound"] for c in cases if c["kind"] == "iii"), None)
    return {
        "type": "solution",
        "key": _key(searcher, i, j),
        "u1": format_expr(u1),
        "u2": format_expr(u2),
        "y": format_expr(inst.y),
        "y_const": str(inst.y_const),
        "heights": {"u1": h1, "u2": h2, "y": height(inst.y), "lam": inst.h_lam},
        "chi": inst.chi,
        "cases": cases,
        "case_bound": case_bound,
        "divisibility": div.ok,
        "degree": {
            "value": deg.degree_bound,
            "bound": deg.bound,
            "holds": deg.holds,
            "dependent_claim": deg.dependent_claim,
        },
        "regime": "generic" if F.nondegenerate and G.nondegenerate else "degenerate-F-G",
        "findings": list(cls.findings) + list(deg.findings),
        "violations": violations,
    }


# -- parallel driver

_WORKER: Searcher | None = None


def _init_worker(config: SearchConfig) -> None:
    global _WORKER
    _WORKER = Searcher(config)


def _scan_chunk(bounds: tuple[int, int]) -> tuple[list[dict], SearchStats]:
    assert _WORKER is not None
    return _WORKER.scan(range(*bounds))


def _chunks(n: int, parts: int) -> list[tuple[int, int]]:
    size = max(1, -(-n // parts))
    return [(a, min(n, a + size)) for a in range(0, n, size)]


def search(config: SearchConfig, workers: int | None = None) -> tuple[list[dict], SearchStats]:
    """All solution records in grid order, plus counters.

    The grid is split into contiguous u1 ranges and the per-range results are
    concatenated in range order, so the output does not depend on ``workers``.
    """
    workers = config.workers if workers is None else workers
    searcher = Searcher(config)
    if workers <= 1:
        return searcher.scan(range(searcher.n_units))
    chunks = _chunks(searcher.n_units, workers * 4)
    records: list[dict] = []
    stats = SearchStats()
    with ProcessPoolExecutor(workers, initializer=_init_worker, initargs=(config,)) as ex:
        for recs, st in ex.map(_scan_chunk, chunks):
            records.extend(recs)
            stats.add(st)
    return records, stats


def iter_grid(searcher: Searcher) -> Iterator[tuple[int, int]]:
    for i in range(searcher.n_units):
        for j in range(searcher.n_units):
            yield i, j
