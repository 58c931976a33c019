"""Exception hierarchy shared by all modules."""


class UnitFieldError(Exception):
    """Base class for every error raised by this package."""


class UndefinedValuationError(UnitFieldError, ValueError):
    """Valuation or height requested for the zero function."""


class DomainError(UnitFieldError, ValueError):
    """An argument lies outside the operation's domain (e.g. not an S-unit)."""


class DegenerateError(UnitFieldError, ValueError):
    """Degenerate geometric input: repeated points, singular conic, dependent covers."""


class NotRationalError(UnitFieldError, ValueError):
    """A quantity that must be rational over the base field is not."""


class InvalidInstanceError(UnitFieldError, ValueError):
    """A unit-equation instance violates one of its invariants.

    ``code`` is a short machine-readable tag such as ``"equation-mismatch"``.
    """

    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code


class VanishingSubsumError(UnitFieldError, ValueError):
    """A tuple passed to the Zannier checker has a vanishing subsum."""

    def __init__(self, subset: tuple[int, ...]):
        super().__init__(f"vanishing subsum at indices {subset}")
        self.subset = subset


class ConfigError(UnitFieldError, ValueError):
    """Bad search/suite configuration."""


class ReportParseError(UnitFieldError, ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
