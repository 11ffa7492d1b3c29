"""Non-deterministic matrices: legal valuations, tautology and entailment.

A matrix is a total multialgebra of truth values plus a non-empty designated
subset.  A legal valuation assigns every subformula a value such that each
connective application lands inside the corresponding result set; shared
subformulas get a single value.  Formulas use the term syntax without
superscripts: identifiers not declared as connectives are atoms.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .core import Check, MultiAlgebra, Signature, validate
from .errors import ArityMismatch, NotTotal, TermSyntaxError, UnknownConnective
from .terms import Node, Term, Variable, _Parser

Formula = Term


class NMatrix:
    """A total multialgebra together with its designated truth values."""

    def __init__(self, algebra: MultiAlgebra, designated: Iterable[str]):
        designated = frozenset(designated)
        if not algebra.is_table_total():
            raise NotTotal("matrix semantics needs a total operation table")
        report = validate(algebra)
        if not report:
            raise ValueError(f"matrix algebra fails validation: {report.violations}")
        if not designated:
            raise ValueError("designated set must be non-empty")
        stray = designated - set(algebra.universe)
        if stray:
            raise ValueError(f"designated elements outside the universe: {sorted(stray)}")
        self.algebra = algebra
        self.designated = designated

    def __repr__(self) -> str:
        return f"NMatrix(|V|={len(self.algebra.universe)}, designated={sorted(self.designated)})"


def print_formula(phi: Formula) -> str:
    if isinstance(phi, Variable):
        return phi.name
    if not phi.children:
        return phi.symbol
    return f"{phi.symbol}({','.join(print_formula(c) for c in phi.children)})"


def parse_formula(text: str, sig: Signature) -> Formula:
    """Parse formula syntax: bare identifiers not declared in `sig` are atoms."""
    parser = _Parser(text)
    phi = _parse_formula(parser, sig)
    parser.done()
    return phi


def _parse_formula(parser: _Parser, sig: Signature) -> Formula:
    ident = parser.take("IDENT")
    if parser.peek("^"):
        raise TermSyntaxError(
            "superscripts are not part of formula syntax", parser.tokens[parser.at].position
        )
    if not parser.peek("("):
        if ident.text in sig:
            if sig.arity(ident.text) != 0:
                raise ArityMismatch(
                    f"connective {ident.text} expects {sig.arity(ident.text)} arguments, got 0"
                )
            return Node(ident.text, 0, ())
        return Variable(ident.text)
    if ident.text not in sig:
        raise UnknownConnective(f"{ident.text!r} is not a declared connective")
    parser.take("(")
    children = [_parse_formula(parser, sig)]
    while parser.peek(","):
        parser.take(",")
        children.append(_parse_formula(parser, sig))
    parser.take(")")
    if len(children) != sig.arity(ident.text):
        raise ArityMismatch(
            f"connective {ident.text} expects {sig.arity(ident.text)} arguments, "
            f"got {len(children)}"
        )
    return Node(ident.text, 0, tuple(children))


def subformulas(phi: Formula) -> tuple[Formula, ...]:
    """All distinct subformulas, children before parents, first occurrence wins."""
    seen: dict[Formula, None] = {}

    def walk(t: Formula) -> None:
        if t in seen:
            return
        if isinstance(t, Node):
            for child in t.children:
                walk(child)
        seen[t] = None

    walk(phi)
    return tuple(seen)


def _check_connectives(phi: Formula, m: NMatrix) -> None:
    for sub in subformulas(phi):
        if isinstance(sub, Node):
            if sub.symbol not in m.algebra.signature:
                raise UnknownConnective(f"{sub.symbol!r} is not a declared connective")
            if m.algebra.signature.arity(sub.symbol) != len(sub.children):
                raise ArityMismatch(
                    f"connective {sub.symbol} used with {len(sub.children)} arguments"
                )


def _ordered_subformulas(formulas: Iterable[Formula]) -> list[Formula]:
    # atoms first (they vary outermost), then composites children-first
    atoms: dict[Formula, None] = {}
    composites: dict[Formula, None] = {}
    for phi in formulas:
        for sub in subformulas(phi):
            (atoms if isinstance(sub, Variable) else composites).setdefault(sub, None)
    return list(atoms) + list(composites)


def _valuations(formulas: list[Formula], m: NMatrix) -> Iterator[dict[str, str]]:
    for phi in formulas:
        _check_connectives(phi, m)
    ordered = _ordered_subformulas(formulas)
    keys = [print_formula(t) for t in ordered]
    acc: dict[str, str] = {}

    def assign(i: int) -> Iterator[dict[str, str]]:
        if i == len(ordered):
            yield dict(acc)
            return
        t = ordered[i]
        if isinstance(t, Variable):
            choices: Iterable[str] = m.algebra.universe
        else:
            args = tuple(acc[print_formula(c)] for c in t.children)
            choices = sorted(m.algebra.apply(t.symbol, args))
        for value in choices:
            acc[keys[i]] = value
            yield from assign(i + 1)
        acc.pop(keys[i], None)

    yield from assign(0)


def legal_valuations(phi: Formula, m: NMatrix) -> Iterator[Mapping[str, str]]:
    """Stream every legal valuation of the subformulas of phi.

    Valuations are emitted in a fixed order: atom values run through the
    universe order outermost, then each composite runs through its result
    set.  Keys are printed subformulas.
    """
    return _valuations([phi], m)


def is_tautology(phi: Formula, m: NMatrix) -> Check:
    """All legal valuations designate phi; witness is a countervaluation."""
    key = print_formula(phi)
    for valuation in legal_valuations(phi, m):
        if valuation[key] not in m.designated:
            return Check(False, valuation)
    return Check(True)


def entails(premises: Iterable[Formula], phi: Formula, m: NMatrix) -> Check:
    """Every legal valuation designating all premises designates phi.

    The valuations range over the joint subformulas of premises and
    conclusion, so shared structure is shared between them.
    """
    premises = list(premises)
    key = print_formula(phi)
    premise_keys = [print_formula(p) for p in premises]
    for valuation in _valuations(premises + [phi], m):
        if all(valuation[k] in m.designated for k in premise_keys):
            if valuation[key] not in m.designated:
                return Check(False, valuation)
    return Check(True)
