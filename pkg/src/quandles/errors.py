"""Exception types shared across the package.

Every error raised on bad input or on an exhausted resource budget derives
from QuandleError, so callers (and the command line front end) can catch one
base class and still tell budget failures apart from validation failures.
"""

from __future__ import annotations


class QuandleError(Exception):
    """Base class for all errors raised by this package."""


class AxiomViolation(QuandleError):
    """A table is not a quandle.

    axiom is 1 (idempotence), 2 (rows are permutations) or 3 (left
    self-distributivity); witness is the first failing instance in scan
    order: (a,) for axioms 1 and 2, (a, b, c) for axiom 3.
    """

    def __init__(self, axiom: int, witness: tuple[int, ...]):
        self.axiom = axiom
        self.witness = witness
        names = {1: "idempotence", 2: "row bijectivity", 3: "left self-distributivity"}
        super().__init__(f"axiom {axiom} ({names[axiom]}) fails at {witness}")


class NotAUnit(QuandleError):
    """The multiplier of an affine quandle is not invertible mod n."""

    def __init__(self, n: int, t: int):
        self.n = n
        self.t = t
        super().__init__(f"{t} is not a unit modulo {n}")


class NotAGroup(QuandleError):
    """A multiplication table fails the group axioms."""


class NotClosed(QuandleError):
    """A subset is not closed under the required operation."""

    def __init__(self, witness: tuple[int, ...], message: str | None = None):
        self.witness = witness
        super().__init__(message or f"subset is not closed, witness {witness}")


class NotACongruence(QuandleError):
    """A partition fails one of the two congruence conditions."""

    def __init__(self, witness: tuple[int, ...] | None = None):
        self.witness = witness
        detail = f", witness {witness}" if witness is not None else ""
        super().__init__(f"partition is not a congruence{detail}")


class NotNormal(QuandleError):
    """A subgroup handed to orbit_congruence is not normal in Inn(Q)."""

    def __init__(self, witness: tuple[tuple[int, ...], tuple[int, ...]]):
        self.witness = witness
        super().__init__("subgroup is not normalized by the inner group")


class CapExceeded(QuandleError):
    """An enumeration (group closure, congruence lattice, subsets) outgrew its cap."""

    def __init__(self, what: str, cap: int):
        self.what = what
        self.cap = cap
        super().__init__(f"{what} exceeded cap {cap}")


class WorkCapExceeded(QuandleError):
    """An identity check used up its table-lookup budget."""

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"identity check exceeded work cap of {cap} lookups")


class DepthCapExceeded(QuandleError):
    """Defensive guard for orbit tree recursion; unreachable for valid quandles."""


class UnknownName(QuandleError):
    """Name not present in the builtin registry."""

    def __init__(self, name: str, known: tuple[str, ...]):
        self.name = name
        self.known = known
        super().__init__(f"unknown builtin {name!r}; known names: {', '.join(known)}")


class InconsistentCharacterizations(QuandleError):
    """Two provably equivalent computations disagreed; indicates a bug."""


class ParseError(QuandleError):
    """Malformed .qnd input."""
