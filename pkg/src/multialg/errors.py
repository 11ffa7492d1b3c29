"""Exception types shared across the package.

Everything raised on purpose derives from MultialgError, so callers (and the
command line front end) can separate expected failures from genuine bugs.
"""

from __future__ import annotations


class MultialgError(Exception):
    """Base class for all errors raised by this package."""


class SignatureMismatch(MultialgError):
    """Two structures that must share a signature do not."""


class UnknownSymbol(MultialgError):
    """An operation symbol is not declared in the signature at hand."""


class ArityMismatch(MultialgError):
    """An argument tuple does not match the declared arity of its symbol."""


class UndefinedTargetApplication(MultialgError):
    """A homomorphism check needs a target application that is undefined."""


class SeedOutsideUniverse(MultialgError):
    """A generation seed contains elements outside the universe."""


class NotGenerating(MultialgError):
    """A set that was required to generate the whole universe does not."""


class ElementOutsideClosure(MultialgError):
    """An element order was requested outside the generated closure."""


class NotWeaklyFree(MultialgError):
    """An operation requiring weak freeness was given a structure without it.

    `clause` names the failing requirement ("disconnected" or
    "ground-generated") and `witness` carries the corresponding evidence:
    an overlap witness, or the generation trace that stalled.
    """

    def __init__(self, clause: str, witness: object = None):
        super().__init__(f"structure is not weakly free: {clause} fails")
        self.clause = clause
        self.witness = witness


class NotHomomorphism(MultialgError):
    """A map that was required to be a homomorphism is not one."""

    def __init__(self, witness: object = None):
        super().__init__("map is not a homomorphism")
        self.witness = witness


class OracleRangeViolation(MultialgError):
    """A choice oracle answered outside the target application's result set."""


class InjectiveChoiceUnavailable(MultialgError):
    """The injective strategy hit a source result set larger than its target."""


class NoDefinedApplications(MultialgError):
    """The maximum result-set size is undefined on an empty table."""


class EmptyUniverse(MultialgError):
    """A construction would produce a structure with no elements."""


class EmptySignature(MultialgError):
    """A construction needs at least one operation symbol."""


class SuperscriptOutOfRange(MultialgError):
    """A term superscript is not below the ambient choice bound kappa."""


class TermSyntaxError(MultialgError):
    """Unparseable term or formula text; carries the failing position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownConnective(MultialgError):
    """A formula uses a connective the matrix signature does not declare."""


class NotTotal(MultialgError):
    """A total operation table was required but entries are missing."""


class EquivalenceViolation(MultialgError):
    """Internal consistency failure: equivalent freeness clauses disagree.

    This is never expected to fire; it indicates a bug in this package, so
    it is surfaced as a crash rather than a verdict.
    """


class DocumentError(MultialgError):
    """A JSON document failed schema validation.

    `location` is a JSON-pointer-style path into the offending document.
    """

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location
