"""Finite multialgebras and their structure-preserving maps.

A multialgebra interprets every operation symbol as a function from argument
tuples to non-empty *sets* of results.  Tables may be partial: an application
that has no entry is simply undefined, and every predicate in this package
quantifies over defined applications only.  Universes and result sets hold
element identifiers (non-empty strings) and all iteration is in lexicographic
order, so every construction here is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, Mapping, NamedTuple

from .errors import SignatureMismatch, UndefinedTargetApplication, UnknownSymbol


class Application(NamedTuple):
    """An operation symbol together with one argument tuple."""

    symbol: str
    args: tuple[str, ...]

    def __str__(self) -> str:
        return f"{self.symbol}({','.join(self.args)})"


@dataclass(frozen=True)
class Signature:
    """A finite set of operation symbols, each with a fixed arity."""

    symbols: tuple[tuple[str, int], ...]

    def __init__(self, symbols: Mapping[str, int] | Iterable[tuple[str, int]]):
        pairs = sorted(dict(symbols).items())
        for name, arity in pairs:
            if not isinstance(name, str) or not name:
                raise ValueError(f"bad symbol name: {name!r}")
            if not isinstance(arity, int) or arity < 0:
                raise ValueError(f"bad arity for {name}: {arity!r}")
        object.__setattr__(self, "symbols", tuple(pairs))
        object.__setattr__(self, "_arities", dict(pairs))

    def arity(self, name: str) -> int:
        try:
            return self._arities[name]
        except KeyError:
            raise UnknownSymbol(f"symbol {name!r} is not declared") from None

    def __contains__(self, name: str) -> bool:
        return name in self._arities

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.symbols)

    @property
    def nullary(self) -> tuple[str, ...]:
        return tuple(name for name, arity in self.symbols if arity == 0)

    @property
    def max_arity(self) -> int:
        return max((arity for _, arity in self.symbols), default=0)


@dataclass(frozen=True)
class ExpandedSignature:
    """The signature obtained by splitting each symbol into kappa copies.

    Each symbol s of the base signature yields s^0 .. s^(kappa-1), all with
    the arity of s.  Term multialgebras are built over these split symbols.
    """

    base: Signature
    kappa: int

    def __post_init__(self):
        if self.kappa < 1:
            raise ValueError("kappa must be at least 1")

    def symbol_name(self, base_name: str, superscript: int) -> str:
        if not 0 <= superscript < self.kappa:
            raise ValueError(f"superscript {superscript} not below {self.kappa}")
        self.base.arity(base_name)
        return f"{base_name}^{superscript}"

    def as_signature(self) -> Signature:
        return Signature(
            {
                f"{name}^{beta}": arity
                for name, arity in self.base.symbols
                for beta in range(self.kappa)
            }
        )


Table = Mapping[tuple[str, tuple[str, ...]], frozenset[str]]


@dataclass(frozen=True, eq=False)
class MultiAlgebra:
    """A finite, possibly partial multialgebra.

    `table` maps (symbol, argument tuple) to a result set.  Entries that are
    absent are undefined applications.  `total` records the *claim* that the
    table is total; `validate` checks it.  Structures are immutable after
    construction and the table is stored in canonical (sorted) order.
    """

    signature: Signature
    universe: tuple[str, ...]
    table: Table
    total: bool = False

    def __init__(
        self,
        signature: Signature,
        universe: Iterable[str],
        table: Mapping[tuple[str, Iterable[str]], Iterable[str]],
        total: bool = False,
    ):
        object.__setattr__(self, "signature", signature)
        object.__setattr__(self, "universe", tuple(sorted(set(universe))))
        canonical: dict[tuple[str, tuple[str, ...]], frozenset[str]] = {}
        for symbol, args in sorted((s, tuple(a)) for s, a in table):
            if symbol not in signature:
                raise UnknownSymbol(f"table uses undeclared symbol {symbol!r}")
            canonical[(symbol, args)] = frozenset(table[(symbol, args)])
        object.__setattr__(self, "table", canonical)
        object.__setattr__(self, "total", bool(total))

    def apply(self, symbol: str, args: Iterable[str]) -> frozenset[str] | None:
        """Result set of one application, or None when it is undefined."""
        return self.table.get((symbol, tuple(args)))

    def defined(self, symbol: str, args: Iterable[str]) -> bool:
        return (symbol, tuple(args)) in self.table

    def applications(self) -> Iterator[tuple[Application, frozenset[str]]]:
        """All defined applications in canonical order."""
        for (symbol, args), result in self.table.items():
            yield Application(symbol, args), result

    def is_table_total(self) -> bool:
        """Whether every symbol has an entry for every argument tuple."""
        for name, arity in self.signature.symbols:
            for args in product(self.universe, repeat=arity):
                if (name, args) not in self.table:
                    return False
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiAlgebra):
            return NotImplemented
        return (
            self.signature == other.signature
            and self.universe == other.universe
            and self.table == other.table
            and self.total == other.total
        )

    def __repr__(self) -> str:
        return (
            f"MultiAlgebra(|A|={len(self.universe)}, "
            f"entries={len(self.table)}, total={self.total})"
        )


@dataclass(frozen=True, eq=False)
class ElementMap:
    """A total function between the universes of two multialgebras."""

    source: MultiAlgebra
    target: MultiAlgebra
    mapping: Mapping[str, str]

    def __init__(self, source: MultiAlgebra, target: MultiAlgebra, mapping: Mapping[str, str]):
        missing = set(source.universe) - set(mapping)
        if missing:
            raise ValueError(f"mapping undefined on {sorted(missing)}")
        stray = set(mapping) - set(source.universe)
        if stray:
            raise ValueError(f"mapping defined outside the source universe: {sorted(stray)}")
        outside = {v for v in mapping.values() if v not in set(target.universe)}
        if outside:
            raise ValueError(f"mapping hits elements outside the target universe: {sorted(outside)}")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "mapping", {k: mapping[k] for k in sorted(mapping)})

    def __call__(self, element: str) -> str:
        return self.mapping[element]

    def apply_tuple(self, args: Iterable[str]) -> tuple[str, ...]:
        return tuple(self.mapping[a] for a in args)

    def image(self) -> frozenset[str]:
        return frozenset(self.mapping.values())

    def is_injective(self) -> bool:
        return len(set(self.mapping.values())) == len(self.mapping)

    def is_surjective(self) -> bool:
        return self.image() == frozenset(self.target.universe)

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def then(self, other: "ElementMap") -> "ElementMap":
        """Composition: first this map, then `other`."""
        if set(self.target.universe) != set(other.source.universe):
            raise ValueError("maps do not compose: universes differ")
        return ElementMap(self.source, other.target, {a: other.mapping[b] for a, b in self.mapping.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ElementMap):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.mapping == other.mapping
        )

    def __repr__(self) -> str:
        return f"ElementMap({dict(self.mapping)!r})"


def identity_map(a: MultiAlgebra) -> ElementMap:
    return ElementMap(a, a, {x: x for x in a.universe})


class Violation(NamedTuple):
    """One validation problem: where it is and which rule it breaks."""

    location: str
    rule: str


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class HomWitness:
    """Evidence that a map fails the homomorphism (or fullness) condition.

    `element` sits in the source result set and `image` escapes the target
    result set when reason is "not-contained"; for fullness failures the
    reason is "not-covered", `element` is the unattained target element and
    `image` is None.
    """

    symbol: str
    args: tuple[str, ...]
    element: str
    image: str | None
    target_args: tuple[str, ...]
    target_result: frozenset[str]
    reason: str = "not-contained"


@dataclass(frozen=True)
class SubWitness:
    """A defined application of the candidate that the parent does not absorb."""

    symbol: str
    args: tuple[str, ...]
    element: str
    parent_result: frozenset[str] | None


@dataclass(frozen=True)
class Check:
    """A boolean verdict with an optional witness for the failing side."""

    ok: bool
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok


def validate(a: MultiAlgebra) -> ValidationReport:
    """Check the structural invariants of a multialgebra.

    Reports every empty result set, every element (argument or result)
    outside the universe, every arity mismatch, and, when the structure
    claims to be total, every missing table entry.
    """
    violations: list[Violation] = []
    elements = set(a.universe)
    if not elements:
        violations.append(Violation("universe", "empty-universe"))
    for app, result in a.applications():
        loc = str(app)
        if len(app.args) != a.signature.arity(app.symbol):
            violations.append(Violation(loc, "arity-mismatch"))
        for x in app.args:
            if x not in elements:
                violations.append(Violation(loc, "out-of-universe"))
        if not result:
            violations.append(Violation(loc, "empty-result"))
        for x in sorted(result):
            if x not in elements:
                violations.append(Violation(loc, "out-of-universe"))
    if a.total:
        for name, arity in a.signature.symbols:
            for args in product(a.universe, repeat=arity):
                if not a.defined(name, args):
                    violations.append(Violation(str(Application(name, args)), "missing-entry"))
    return ValidationReport(not violations, tuple(violations))


def _require_same_signature(f: ElementMap) -> None:
    if f.source.signature != f.target.signature:
        raise SignatureMismatch("source and target interpret different signatures")


def is_homomorphism(f: ElementMap) -> Check:
    """Decide whether f maps each result set into the target result set.

    Requires the image application to be defined in the target for every
    application defined in the source; raises UndefinedTargetApplication
    otherwise.  On failure the witness names the escaping element.
    """
    _require_same_signature(f)
    for app, result in f.source.applications():
        target_args = f.apply_tuple(app.args)
        target_result = f.target.apply(app.symbol, target_args)
        if target_result is None:
            raise UndefinedTargetApplication(
                f"target application {Application(app.symbol, target_args)} is undefined"
            )
        for x in sorted(result):
            if f(x) not in target_result:
                return Check(
                    False,
                    HomWitness(app.symbol, app.args, x, f(x), target_args, target_result),
                )
    return Check(True)


def is_full_homomorphism(f: ElementMap) -> Check:
    """Decide whether f maps each result set *onto* the target result set."""
    verdict = is_homomorphism(f)
    if not verdict:
        return verdict
    for app, result in f.source.applications():
        target_args = f.apply_tuple(app.args)
        target_result = f.target.apply(app.symbol, target_args)
        image = {f(x) for x in result}
        for y in sorted(target_result - image):
            return Check(
                False,
                HomWitness(app.symbol, app.args, y, None, target_args, target_result, "not-covered"),
            )
    return Check(True)


def is_isomorphism(f: ElementMap) -> bool:
    """A bijective full homomorphism; its inverse is then one as well."""
    return f.is_bijective() and bool(is_full_homomorphism(f))


def is_submultialgebra(b: MultiAlgebra, a: MultiAlgebra) -> Check:
    """Decide whether b is a submultialgebra of a.

    b must live on a subset of a's universe and share its signature; the
    verdict is true when every application defined in b is defined in a
    with a result set containing b's.
    """
    if b.signature != a.signature:
        raise SignatureMismatch("candidate and parent interpret different signatures")
    if not set(b.universe) <= set(a.universe):
        raise ValueError("candidate universe is not a subset of the parent universe")
    for app, result in b.applications():
        parent = a.apply(app.symbol, app.args)
        if parent is None:
            return Check(False, SubWitness(app.symbol, app.args, min(result), None))
        for x in sorted(result - parent):
            return Check(False, SubWitness(app.symbol, app.args, x, parent))
    return Check(True)
