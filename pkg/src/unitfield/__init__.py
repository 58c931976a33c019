"""Exact arithmetic for S-unit equations over the rational function field.

Submodules
----------
funfield   polynomials, rational functions, places, valuations, heights
covers     genus and Euler characteristic of (bi)quadratic covers
moduli     cross-ratios and the conic-plus-two-lines moduli pipeline
vojta      the unit equation, its resultants, inequality checkers, classifier
harness    configuration, exhaustive search, suites, reports, command line
"""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    ConfigError,
    DegenerateError,
    DomainError,
    InvalidInstanceError,
    NotRationalError,
    ReportParseError,
    UndefinedValuationError,
    UnitFieldError,
    VanishingSubsumError,
)
from .poly import Poly  # noqa: E402
from .funfield import (  # noqa: E402
    INFINITY,
    Place,
    RatFunc,
    SSet,
    d_omega,
    divisor,
    height,
    mult_dependence,
    proj_height,
    theta,
    valuation,
)
from .vojta import UnitEquationInstance, classify, validate  # noqa: E402

__all__ = [
    "__version__",
    "Poly",
    "RatFunc",
    "Place",
    "INFINITY",
    "SSet",
    "valuation",
    "divisor",
    "height",
    "d_omega",
    "theta",
    "mult_dependence",
    "proj_height",
    "UnitEquationInstance",
    "validate",
    "classify",
    "UnitFieldError",
    "UndefinedValuationError",
    "DomainError",
    "DegenerateError",
    "NotRationalError",
    "InvalidInstanceError",
    "VanishingSubsumError",
    "ConfigError",
    "ReportParseError",
]
