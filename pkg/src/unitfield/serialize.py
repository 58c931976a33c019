"""Exact JSON round-tripping for polynomials, rational functions and places.

Wire format:

* rationals are ``"p/q"`` strings (``"p"`` when integral),
* polynomials are ascending coefficient lists of such strings,
* rational functions are ``{"num": [...], "den": [...]}``,
* places are ``{"kind": "finite", "min_poly": [...]}`` or ``{"kind": "infinity"}``.
"""

from __future__ import annotations

import dataclasses
import re
from fractions import Fraction
from typing import Any

from .funfield import INFINITY, Place, RatFunc, SSet
from .poly import Poly, as_fraction

__all__ = [
    "rat_to_str",
    "rat_from_str",
    "poly_to_json",
    "poly_from_json",
    "ratfunc_to_json",
    "ratfunc_from_json",
    "place_to_json",
    "place_from_json",
    "sset_to_json",
    "sset_from_json",
    "parse_expr",
    "format_expr",
    "to_jsonable",
]


def rat_to_str(x) -> str:
    return str(as_fraction(x))


def rat_from_str(s) -> Fraction:
    if isinstance(s, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise ValueError(f"expected a 'p/q' string, got {s!r}")
    return Fraction(s.strip())


def poly_to_json(p: Poly) -> list[str]:
    return [str(c) for c in p.coeffs]


def poly_from_json(data) -> Poly:
    if not isinstance(data, list):
        raise ValueError("polynomial must be a list of coefficients")
    return Poly(rat_from_str(c) for c in data)


def ratfunc_to_json(f: RatFunc) -> dict:
    return {"num": poly_to_json(f.num), "den": poly_to_json(f.den)}


def ratfunc_from_json(data) -> RatFunc:
    if not isinstance(data, dict) or set(data) - {"num", "den"} or "num" not in data:
        raise ValueError("rational function must be {num, den}")
    return RatFunc(poly_from_json(data["num"]), poly_from_json(data.get("den", ["1"])))


def place_to_json(v: Place) -> dict:
    if v.is_infinity:
        return {"kind": "infinity"}
    return {"kind": "finite", "min_poly": poly_to_json(v.min_poly)}


def place_from_json(data, check: bool = True) -> Place:
    if not isinstance(data, dict):
        raise ValueError("place must be an object")
    kind = data.get("kind")
    if kind == "infinity":
        return INFINITY
    if kind == "finite":
        return Place.finite(poly_from_json(data["min_poly"]), check=check)
    raise ValueError(f"unknown place kind {kind!r}")


def sset_to_json(S: SSet) -> dict:
    return {
        "places": [place_to_json(v) for v in S.places],
        "designated": [place_to_json(v) for v in S.designated],
    }


def sset_from_json(data) -> SSet:
    if isinstance(data, list):
        return SSet([place_from_json(v) for v in data])
    places = [place_from_json(v) for v in data["places"]]
    des = data.get("designated")
    return SSet(places, None if des is None else [place_from_json(v) for v in des])


# ---------------------------------------------------------------------------
# command-line expression syntax:  num=[a0,a1,...];den=[b0,...]

_EXPR = re.compile(r"^\s*num\s*=\s*\[(?P<num>[^\]]*)\]\s*(;\s*den\s*=\s*\[(?P<den>[^\]]*)\]\s*)?$")


def parse_expr(text: str) -> RatFunc:
    m = _EXPR.match(text)
    if not m:
        raise ValueError(f"bad rational-function expression {text!r}")

    def coeffs(s):
        s = s.strip() if s is not None else "1"
        return [Fraction(x.strip()) for x in s.split(",") if x.strip()] if s else []

    den = Poly(coeffs(m.group("den")))
    if not den:
        raise ValueError("denominator must be nonzero")
    return RatFunc(Poly(coeffs(m.group("num"))), den)


def format_expr(f: RatFunc) -> str:
    return "num=[{}];den=[{}]".format(
        ",".join(str(c) for c in f.num.coeffs), ",".join(str(c) for c in f.den.coeffs)
    )


def to_jsonable(value: Any) -> Any:
    """Recursively convert reports to JSON-ready data with stable field order."""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return value
    if isinstance(value, RatFunc):
        return ratfunc_to_json(value)
    if isinstance(value, Poly):
        return poly_to_json(value)
    if isinstance(value, Place):
        return place_to_json(value)
    if isinstance(value, SSet):
        return sset_to_json(value)
    if hasattr(value, "to_dict"):
        return to_jsonable(value.to_dict())
    if dataclasses.is_dataclass(value):
        return {f.name: to_jsonable(getattr(value, f.name)) for f in dataclasses.fields(value)}
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, frozenset, set)):
        items = list(value)
        if isinstance(value, (set, frozenset)):
            items.sort(key=lambda x: repr(to_jsonable(x)))
        return [to_jsonable(v) for v in items]
    raise TypeError(f"cannot serialize {type(value).__name__}")
