"""Chains, deconstruction graphs and the weak-freeness verdict.

An infinite chain keeps deconstructing: each element of the sequence sits in
a result set of an application having the next element among its arguments.
On a finite structure that is exactly a cycle in the deconstruction graph,
so chain search is a lasso search and the witness is a stem plus a cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, NamedTuple

from .core import Check, MultiAlgebra
from .errors import EquivalenceViolation
from .structure import (
    BasisCertificate,
    GroundGeneration,
    is_disconnected,
    is_generated_by_ground,
    strong_basis,
)


class Justification(NamedTuple):
    """Why one deconstruction edge (r, x) exists.

    The application of `symbol` to `args` is defined, has r in its result
    set, and carries x at index `position` of the argument tuple.
    """

    symbol: str
    args: tuple[str, ...]
    position: int


@dataclass(frozen=True)
class DeconstructionGraph:
    """Directed graph with an edge (r, x) for every defined application
    producing r with x among its arguments; every edge keeps the full list
    of justifying (symbol, args, position) triples."""

    nodes: tuple[str, ...]
    edges: Mapping[tuple[str, str], tuple[Justification, ...]]

    def successors(self, node: str) -> tuple[str, ...]:
        return tuple(x for (r, x) in self.edges if r == node)


def deconstruction_graph(a: MultiAlgebra) -> DeconstructionGraph:
    collected: dict[tuple[str, str], list[Justification]] = {}
    for app, result in a.applications():
        for position, x in enumerate(app.args):
            for r in sorted(result):
                collected.setdefault((r, x), []).append(
                    Justification(app.symbol, app.args, position)
                )
    edges = {key: tuple(sorted(set(js))) for key, js in sorted(collected.items())}
    return DeconstructionGraph(tuple(a.universe), edges)


@dataclass(frozen=True)
class ChainWitness:
    """A lasso presenting one infinite chain: the stem followed by the cycle
    repeated forever.  `justifications` aligns with the walk stem + cycle,
    one triple per consecutive edge, the last one closing the cycle."""

    stem: tuple[str, ...]
    cycle: tuple[str, ...]
    justifications: tuple[Justification, ...]

    def walk_prefix(self) -> tuple[str, ...]:
        return self.stem + self.cycle


def find_chain(a: MultiAlgebra) -> ChainWitness | None:
    """Search for an infinite chain; None means the structure is chainless.

    Depth-first traversal of the deconstruction graph in universe order,
    returning the first lasso found: a gray-node hit closes the cycle, the
    path walked to reach it is the stem.
    """
    graph = deconstruction_graph(a)
    successors: dict[str, list[str]] = {v: [] for v in graph.nodes}
    for r, x in graph.edges:
        successors[r].append(x)
    for outs in successors.values():
        outs.sort()

    WHITE, GRAY, BLACK = 0, 1, 2
    color = {v: WHITE for v in graph.nodes}
    for root in graph.nodes:
        if color[root] != WHITE:
            continue
        color[root] = GRAY
        stack = [(root, iter(successors[root]))]
        path = [root]
        while stack:
            node, pending = stack[-1]
            advanced = False
            for nxt in pending:
                if color[nxt] == GRAY:
                    at = path.index(nxt)
                    stem, cycle = tuple(path[:at]), tuple(path[at:])
                    walk = stem + cycle
                    steps = list(zip(walk, walk[1:])) + [(cycle[-1], cycle[0])]
                    justs = tuple(graph.edges[step][0] for step in steps)
                    return ChainWitness(stem, cycle, justs)
                if color[nxt] == WHITE:
                    color[nxt] = GRAY
                    stack.append((nxt, iter(successors[nxt])))
                    path.append(nxt)
                    advanced = True
                    break
            if not advanced:
                color[node] = BLACK
                stack.pop()
                path.pop()
    return None


def verify_chain_witness(a: MultiAlgebra, w: ChainWitness) -> bool:
    """Re-check a chain witness against the structure it came from."""
    if not w.cycle:
        return False
    walk = tuple(w.stem) + tuple(w.cycle)
    steps = list(zip(walk, walk[1:])) + [(w.cycle[-1], w.cycle[0])]
    if len(w.justifications) != len(steps):
        return False
    for (r, x), just in zip(steps, w.justifications):
        result = a.apply(just.symbol, just.args)
        if result is None or r not in result:
            return False
        if just.position >= len(just.args) or just.args[just.position] != x:
            return False
    return True


@dataclass(frozen=True)
class FreenessVerdict:
    """All four freeness clauses with their evidence, plus the verdict.

    Weak freeness is disconnectedness paired with any one of: generation by
    the ground, the ground being a strong basis, chainlessness.  These three
    pairs are provably equivalent and is_weakly_free recomputes each clause
    independently, refusing to answer if they ever disagree.

    Mere existence of a strong basis is strictly weaker than the paired
    clauses: a cycle none of whose members is produced from outside forces
    every one of them into every generating set, so a minimum generating set
    can exist while the ground generates nothing (s(a) = {a}, s(b) = {b} is
    the smallest such structure).  The verdict still exposes the basis as
    found; only the pairing uses the ground-equality form.
    """

    disconnected: Check
    ground_generated: GroundGeneration
    strong_basis: frozenset[str] | None
    basis_certificate: BasisCertificate
    chain: ChainWitness | None
    weakly_free: bool

    @property
    def chainless(self) -> bool:
        return self.chain is None

    def __bool__(self) -> bool:
        return self.weakly_free


def is_weakly_free(a: MultiAlgebra) -> FreenessVerdict:
    """Decide weak freeness, cross-checking the equivalent formulations.

    The basis clause compares the basis against the ground rather than
    testing bare existence: when the ground generates, the ground is the
    minimum generating set, and conversely a basis equal to the ground
    certifies generation by the ground.  Bare existence would disagree with
    the other clauses exactly on self-sustaining cycles.
    """
    disconnected = is_disconnected(a)
    ground_generated = is_generated_by_ground(a)
    basis, certificate = strong_basis(a)
    chain = find_chain(a)

    by_ground = disconnected.ok and ground_generated.ok
    by_basis = disconnected.ok and basis == ground_generated.trace.seed
    by_chains = disconnected.ok and chain is None
    if not (by_ground == by_basis == by_chains):
        raise EquivalenceViolation(
            "freeness clauses disagree: "
            f"ground-generated={ground_generated.ok}, "
            f"strong-basis={basis is not None}, chainless={chain is None} "
            f"(disconnected={disconnected.ok})"
        )
    return FreenessVerdict(
        disconnected=disconnected,
        ground_generated=ground_generated,
        strong_basis=basis,
        basis_certificate=certificate,
        chain=chain,
        weakly_free=by_ground,
    )
