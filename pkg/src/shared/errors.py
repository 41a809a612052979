"""Exception hierarchy.

Every error raised by the engine derives from EngineError. The three
branches map onto CLI exit codes: ValidationError -> 2,
DiscrepancyError -> 1, SizeGuardError -> 3.
"""


class EngineError(Exception):
    """Base exception for engine errors."""
    pass


class ValidationError(EngineError):
    """Raised when an input violates a documented precondition."""
    pass


class DiscrepancyError(EngineError):
    """Raised when an exact identity that must hold does not."""
    pass


class SizeGuardError(EngineError):
    """Raised when a construction would exceed a configured cap."""

    def __init__(self, what: str, dimension: int, cap: int):
        self.what = what
        self.dimension = dimension
        self.cap = cap
        super().__init__(f"{what}: dimension {dimension} exceeds cap {cap} (use --force to override)")


# === Groups and algebras ===

class NotAssociative(ValidationError):
    """Raised when a multiplication table has a non-associative triple."""

    def __init__(self, triple, detail: str = ''):
        self.triple = tuple(triple)
        super().__init__(f"not associative on triple {self.triple}{': ' + detail if detail else ''}")


class NoIdentity(ValidationError):
    """Raised when a group table has no two-sided identity."""
    pass


class NoInverse(ValidationError):
    """Raised when a group element has no two-sided inverse."""

    def __init__(self, element):
        self.element = element
        super().__init__(f"element {element!r} has no inverse")


class AlgebraMismatch(ValidationError):
    """Raised when operands live over different algebras."""
    pass


class NotAnIdeal(ValidationError):
    """Raised when a quotient is requested by a subspace that is not a two-sided ideal."""
    pass


class NotIdempotent(ValidationError):
    """Raised when an element expected to satisfy e*e = e does not."""
    pass


class SingularMatrix(ValidationError):
    """Raised when an inverse is requested for a singular matrix."""
    pass


# === Rees semigroups ===

class BadShape(ValidationError):
    """Raised when a sandwich matrix or table has the wrong shape or entries."""
    pass


class EmptyRow(ValidationError):
    """Raised when a sandwich row (a Lambda index) has only o entries."""

    def __init__(self, row: int):
        self.row = row
        super().__init__(f"sandwich row lambda={row + 1} has no non-o entry")


class EmptyColumn(ValidationError):
    """Raised when a sandwich column (an I index) has only o entries."""

    def __init__(self, column: int):
        self.column = column
        super().__init__(f"sandwich column i={column + 1} has no non-o entry")


class RangeMismatch(ValidationError):
    """Raised when alpha(I) != beta(Lambda) for a groupoid sandwich."""
    pass


class ZeroSandwichEntry(ValidationError):
    """Raised when a construction needs p[lambda][i] != o."""

    def __init__(self, i: int, lam: int):
        self.i = i
        self.lam = lam
        super().__init__(f"sandwich entry p(lambda={lam + 1}, i={i + 1}) is o")


# === Modules ===

class ActionAxiomError(ValidationError):
    """Raised when bimodule actions fail an action axiom."""
    pass


class IllDefinedAction(ValidationError):
    """Raised when an action does not descend to a quotient."""
    pass


class BadSplitting(ValidationError):
    """Raised when a proposed splitting of multiplication is not one."""
    pass


class NotInduced(ValidationError):
    """Raised when an induced bimodule is required."""
    pass


# === Configuration ===

class ConfigSyntaxError(ValidationError):
    """Raised on malformed instance configuration text."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class UnknownGroupElement(ValidationError):
    """Raised when a config names an element the group does not have."""

    def __init__(self, name: str, where: str = ''):
        self.name = name
        super().__init__(f"unknown group element {name!r}{' at ' + where if where else ''}")
