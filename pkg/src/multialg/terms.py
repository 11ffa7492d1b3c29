"""Terms with choice superscripts and truncated term multialgebras.

Applying a symbol s to terms does not return one term but the whole bundle
s^0(...), ..., s^(kappa-1)(...): one copy per possible choice, where kappa
bounds how many values any application may take.  Truncating the resulting
term structure at a finite depth yields a finite, weakly free multialgebra
whose ground is exactly the variable set.

Concrete syntax:

    term := IDENT | IDENT '^' NAT | IDENT '^' NAT '(' term (',' term)* ')'

with identifiers matching [A-Za-z_][A-Za-z0-9_]*.  A bare identifier must be
a declared variable, and an identifier with a superscript but no argument
list must be a declared nullary symbol.  Whitespace between tokens is
insignificant; printing is canonical (no spaces).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Iterable, NamedTuple

from .core import MultiAlgebra, Signature
from .errors import (
    ArityMismatch,
    EmptyUniverse,
    SuperscriptOutOfRange,
    TermSyntaxError,
    UnknownSymbol,
)


@dataclass(frozen=True)
class Variable:
    name: str


@dataclass(frozen=True)
class Node:
    symbol: str
    superscript: int
    children: tuple["Term", ...]


Term = Variable | Node


def term_order(t: Term) -> int:
    """Nesting depth: variables and nullary applications have order 0."""
    if isinstance(t, Variable) or not t.children:
        return 0
    return 1 + max(term_order(c) for c in t.children)


def print_term(t: Term) -> str:
    if isinstance(t, Variable):
        return t.name
    head = f"{t.symbol}^{t.superscript}"
    if not t.children:
        return head
    return f"{head}({','.join(print_term(c) for c in t.children)})"


def mt_apply(sig: Signature, symbol: str, args: Iterable[Term], kappa: int) -> frozenset[Term]:
    """All kappa superscripted copies of one application."""
    if kappa < 1:
        raise ValueError("kappa must be at least 1")
    arity = sig.arity(symbol)
    args = tuple(args)
    if len(args) != arity:
        raise ArityMismatch(f"{symbol} expects {arity} arguments, got {len(args)}")
    return frozenset(Node(symbol, beta, args) for beta in range(kappa))


def enumerate_terms(
    sig: Signature, variables: Iterable[str], kappa: int, depth: int
) -> tuple[Term, ...]:
    """Every term of order at most `depth`, sorted by printed form."""
    if kappa < 1:
        raise ValueError("kappa must be at least 1")
    if depth < 0:
        raise ValueError("depth must be non-negative")
    names = sorted(set(variables))
    level: list[Term] = [Variable(v) for v in names]
    for symbol in sig.nullary:
        level.extend(Node(symbol, beta, ()) for beta in range(kappa))
    if not level:
        raise EmptyUniverse("no variables and no nullary symbols")
    alive: list[Term] = list(level)
    order_of = {t: 0 for t in alive}
    for d in range(1, depth + 1):
        fresh: list[Term] = []
        for symbol, arity in sig.symbols:
            if arity == 0:
                continue
            for combo in product(alive, repeat=arity):
                # exactly-order-d results only; lower ones already exist
                if max(order_of[c] for c in combo) != d - 1:
                    continue
                for beta in range(kappa):
                    fresh.append(Node(symbol, beta, combo))
        for t in fresh:
            order_of[t] = d
        alive.extend(fresh)
    return tuple(sorted(alive, key=print_term))


def term_universe(
    sig: Signature, variables: Iterable[str], kappa: int, depth: int
) -> dict[str, Term]:
    """Printed form -> term, for every term of order at most `depth`."""
    return {print_term(t): t for t in enumerate_terms(sig, variables, kappa, depth)}


def truncate_mt(
    sig: Signature, variables: Iterable[str], kappa: int, depth: int
) -> MultiAlgebra:
    """The term multialgebra over kappa choices, cut at a finite depth.

    The universe holds (printed forms of) all terms of order <= depth; an
    application is defined exactly when its results still fit, i.e. when
    every argument has order <= depth - 1.  The ground is the variable set
    and the structure is weakly free.
    """
    terms = enumerate_terms(sig, variables, kappa, depth)
    ids = [print_term(t) for t in terms]
    if len(set(ids)) != len(ids):
        raise ValueError("variable names collide with printed term forms")
    by_order: dict[int, list[Term]] = {}
    for t in terms:
        by_order.setdefault(term_order(t), []).append(t)
    eligible: list[Term] = []
    for d in range(depth):
        eligible.extend(by_order.get(d, []))

    table: dict[tuple[str, tuple[str, ...]], frozenset[str]] = {}
    for symbol, arity in sig.symbols:
        if arity == 0:
            table[(symbol, ())] = frozenset(
                print_term(Node(symbol, beta, ())) for beta in range(kappa)
            )
            continue
        for combo in product(eligible, repeat=arity):
            key = (symbol, tuple(print_term(c) for c in combo))
            table[key] = frozenset(
                print_term(Node(symbol, beta, combo)) for beta in range(kappa)
            )
    return MultiAlgebra(sig, ids, table, total=sig.max_arity == 0)


# ----- concrete syntax -----

class _Token(NamedTuple):
    kind: str
    text: str
    position: int


_TOKEN_RE = re.compile(
    r"(?P<IDENT>[A-Za-z_][A-Za-z0-9_]*)|(?P<NAT>\d+)|(?P<PUNCT>[\^(),])|(?P<WS>\s+)|(?P<BAD>.)"
)


def tokenize(text: str) -> list[_Token]:
    tokens = []
    for match in _TOKEN_RE.finditer(text):
        kind = match.lastgroup
        if kind == "WS":
            continue
        if kind == "BAD":
            raise TermSyntaxError(f"unexpected character {match.group()!r}", match.start())
        if kind == "PUNCT":
            kind = match.group()
        tokens.append(_Token(kind, match.group(), match.start()))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.at = 0

    def peek(self, kind: str) -> bool:
        return self.at < len(self.tokens) and self.tokens[self.at].kind == kind

    def take(self, kind: str) -> _Token:
        if not self.peek(kind):
            pos = self.tokens[self.at].position if self.at < len(self.tokens) else len(self.text)
            raise TermSyntaxError(f"expected {kind}", pos)
        token = self.tokens[self.at]
        self.at += 1
        return token

    def done(self) -> None:
        if self.at != len(self.tokens):
            raise TermSyntaxError("trailing input", self.tokens[self.at].position)


def parse_term(
    text: str, sig: Signature, variables: Iterable[str], kappa: int
) -> Term:
    """Parse the concrete term syntax, validating names, arities and kappa."""
    declared = set(variables)
    parser = _Parser(text)
    term = _parse_term(parser, sig, declared, kappa)
    parser.done()
    return term


def _parse_term(parser: _Parser, sig: Signature, variables: set[str], kappa: int) -> Term:
    ident = parser.take("IDENT")
    if not parser.peek("^"):
        if ident.text not in variables:
            raise UnknownSymbol(f"{ident.text!r} is not a declared variable")
        return Variable(ident.text)
    parser.take("^")
    nat = parser.take("NAT")
    if ident.text not in sig:
        raise UnknownSymbol(f"{ident.text!r} is not a declared symbol")
    superscript = int(nat.text)
    if superscript >= kappa:
        raise SuperscriptOutOfRange(f"superscript {superscript} not below kappa={kappa}")
    arity = sig.arity(ident.text)
    if not parser.peek("("):
        if arity != 0:
            raise ArityMismatch(f"{ident.text} expects {arity} arguments, got 0")
        return Node(ident.text, superscript, ())
    parser.take("(")
    children = [_parse_term(parser, sig, variables, kappa)]
    while parser.peek(","):
        parser.take(",")
        children.append(_parse_term(parser, sig, variables, kappa))
    parser.take(")")
    if len(children) != arity:
        raise ArityMismatch(f"{ident.text} expects {arity} arguments, got {len(children)}")
    return Node(ident.text, superscript, tuple(children))
