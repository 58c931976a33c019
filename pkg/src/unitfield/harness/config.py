"""Search and suite configuration, read from JSON."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from ..errors import ConfigError
from ..funfield import INFINITY, Place, RatFunc, SSet
from ..serialize import (
    format_expr,
    parse_expr,
    place_from_json,
    place_to_json,
    ratfunc_from_json,
)

__all__ = ["SearchConfig", "DEFAULT_GRID_CAP", "SUITE_NAMES", "load_config"]

DEFAULT_GRID_CAP = 10**7

SUITE_NAMES = (
    "identities",
    "cz",
    "zannier",
    "derivative-bound",
    "moduli",
    "cover",
    "discriminant-bounds",
)

_KNOWN = {
    "S", "designated", "lam", "exponent_bound", "constant_pool", "strict", "seed",
    "suites", "workers", "grid_cap", "suite_sizes",
}


def _place(x) -> Place:
    """A place from ``"inf"``, a rational (string or int) or a JSON place object."""
    if isinstance(x, dict):
        return place_from_json(x)
    if x is None or x == "inf":
        return INFINITY
    if isinstance(x, bool):
        raise ConfigError(f"bad place {x!r}")
    try:
        return Place.at(Fraction(x) if isinstance(x, str) else x)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ConfigError(f"bad place {x!r}") from exc


@dataclass(frozen=True)
class SearchConfig:
    S: SSet
    lam: RatFunc
    exponent_bound: int = 2
    constant_pool: tuple[Fraction, ...] = (Fraction(1), Fraction(-1))
    strict: bool = True
    seed: int = 0
    suites: tuple[str, ...] = ()
    workers: int = 1
    grid_cap: int = DEFAULT_GRID_CAP
    suite_sizes: dict = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.exponent_bound, int) or self.exponent_bound < 1:
            raise ConfigError("exponent_bound must be a positive integer")
        if not self.constant_pool:
            raise ConfigError("constant_pool must be nonempty")
        if any(c == 0 for c in self.constant_pool):
            raise ConfigError("constant_pool must exclude 0")
        if len(set(self.constant_pool)) != len(self.constant_pool):
            raise ConfigError("constant_pool has repeated entries")
        if self.lam.is_constant():
            raise ConfigError("lam must be non-constant")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")
        for s in self.suites:
            if s not in SUITE_NAMES:
                raise ConfigError(f"unknown suite {s!r}; known: {', '.join(SUITE_NAMES)}")

    @classmethod
    def from_dict(cls, data: dict) -> "SearchConfig":
        if not isinstance(data, dict):
            raise ConfigError("config must be a JSON object")
        unknown = set(data) - _KNOWN
        if unknown:
            raise ConfigError(f"unknown config fields: {sorted(unknown)}")
        for req in ("S", "lam"):
            if req not in data:
                raise ConfigError(f"missing field {req!r}")
        try:
            places = [_place(x) for x in data["S"]]
            if INFINITY not in places:
                places.append(INFINITY)
            des = data.get("designated")
            S = SSet(places, None if des is None else [_place(x) for x in des])
            lam = data["lam"]
            lam = parse_expr(lam) if isinstance(lam, str) else ratfunc_from_json(lam)
            pool = tuple(Fraction(str(c)) for c in data.get("constant_pool", ["1", "-1"]))
        except ConfigError:
            raise
        except (ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
            raise ConfigError(str(exc)) from exc
        suites = data.get("suites", [])
        if isinstance(suites, str):
            suites = [suites]
        return cls(
            S=S,
            lam=lam,
            exponent_bound=data.get("exponent_bound", 2),
            constant_pool=pool,
            strict=bool(data.get("strict", True)),
            seed=int(data.get("seed", 0)),
            suites=tuple(suites),
            workers=int(data.get("workers", 1)),
            grid_cap=int(data.get("grid_cap", DEFAULT_GRID_CAP)),
            suite_sizes=dict(data.get("suite_sizes", {})),
        )

    def to_dict(self) -> dict:
        """Canonical form; worker count is deliberately left out (it must not
        influence any output)."""
        return {
            "S": [place_to_json(v) for v in self.S.places],
            "designated": [place_to_json(v) for v in self.S.designated],
            "lam": format_expr(self.lam),
            "exponent_bound": self.exponent_bound,
            "constant_pool": [str(c) for c in self.constant_pool],
            "strict": self.strict,
            "seed": self.seed,
            "suites": list(self.suites),
            "grid_cap": self.grid_cap,
            "suite_sizes": dict(sorted(self.suite_sizes.items())),
        }

    def digest(self) -> str:
        blob = json.dumps(self.to_dict(), separators=(",", ":"), sort_keys=True)
        return hashlib.sha256(blob.encode()).hexdigest()


def load_config(path: str | Path) -> SearchConfig:
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON: {exc}") from exc
    return SearchConfig.from_dict(data)
