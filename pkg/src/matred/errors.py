"""Exception types shared across the package."""

from __future__ import annotations


class MatredError(Exception):
    """Base class for input errors (CLI exit code 2)."""


class UniverseTooLarge(MatredError):
    def __init__(self, n: int, cap: int):
        super().__init__(f"universe size {n} exceeds the enumeration cap {cap}")
        self.n = n
        self.cap = cap


class ParseError(MatredError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


class AxiomViolation(MatredError):
    """A candidate independent-set family breaks I1, I2 or I3.

    ``witness`` holds the offending sets as bitmasks.
    """

    def __init__(self, axiom: str, witness: tuple[int, ...], detail: str = ""):
        from .subsets import format_set

        shown = ", ".join(format_set(w) for w in witness)
        super().__init__(f"{axiom} violated by {shown}" + (f": {detail}" if detail else ""))
        self.axiom = axiom
        self.witness = witness


class WeightArityMismatch(MatredError):
    def __init__(self, got: int, expected: int):
        super().__init__(f"got {got} weights for a universe of size {expected}")
        self.got = got
        self.expected = expected


class NotAFlat(MatredError):
    pass


class FullRankFlat(MatredError):
    pass


class RouteMismatch(AssertionError):
    """Two computations that must agree returned different answers."""

    def __init__(self, what: str, **routes):
        parts = "; ".join(f"{k}={v}" for k, v in routes.items())
        super().__init__(f"{what}: {parts}")
        self.what = what
        self.routes = routes
