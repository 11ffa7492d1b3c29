"""Ground elements, generation closures, disconnectedness and strong bases.

The build set of a structure collects everything some application can
produce; the ground is its complement.  Generation runs the operations to a
fixpoint from a seed set, recording stage-by-stage growth so that element
orders and producing applications can be read back off the trace.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

from .core import Application, Check, MultiAlgebra
from .errors import ElementOutsideClosure, NotGenerating, SeedOutsideUniverse


def build(a: MultiAlgebra) -> frozenset[str]:
    """Union of the result sets of all defined applications."""
    out: set[str] = set()
    for _, result in a.applications():
        out |= result
    return frozenset(out)


def ground(a: MultiAlgebra) -> frozenset[str]:
    """Elements no application can produce."""
    return frozenset(a.universe) - build(a)


class Producer(NamedTuple):
    """The application that first produced an element, and at which stage."""

    symbol: str
    args: tuple[str, ...]
    stage: int


@dataclass(frozen=True)
class GenerationTrace:
    """Stage-by-stage record of a generation closure.

    `stages` is strictly increasing: stage 0 is the seed together with all
    nullary results, stage m+1 adds every application whose arguments are
    already present.  `producer` assigns each generated non-seed element one
    producing application.
    """

    seed: frozenset[str]
    stages: tuple[frozenset[str], ...]
    producer: Mapping[str, Producer]

    @property
    def final(self) -> frozenset[str]:
        return self.stages[-1]

    def stage_of(self, element: str) -> int | None:
        """Least stage index containing the element, None when never reached."""
        for index, stage in enumerate(self.stages):
            if element in stage:
                return index
        return None

    def __contains__(self, element: str) -> bool:
        return element in self.stages[-1]


def generate(a: MultiAlgebra, seed: Iterable[str]) -> GenerationTrace:
    """Close a seed set under all defined applications.

    Nullary results enter at stage 0 alongside the seed; each later stage
    fires every application whose argument tuple is already available.
    """
    seed_set = frozenset(seed)
    stray = seed_set - set(a.universe)
    if stray:
        raise SeedOutsideUniverse(f"seed elements outside the universe: {sorted(stray)}")

    producer: dict[str, Producer] = {}
    current = set(seed_set)
    for app, result in a.applications():
        if not app.args:
            for x in sorted(result):
                if x not in current:
                    producer[x] = Producer(app.symbol, app.args, 0)
            current |= result
    stages = [frozenset(current)]

    pending = [(app, result) for app, result in a.applications() if app.args]
    fired = [False] * len(pending)
    while True:
        added: set[str] = set()
        stage_index = len(stages)
        for i, (app, result) in enumerate(pending):
            if fired[i] or not all(x in current for x in app.args):
                continue
            fired[i] = True
            for x in sorted(result):
                if x not in current and x not in added:
                    producer[x] = Producer(app.symbol, app.args, stage_index)
                    added.add(x)
        if not added:
            break
        current |= added
        stages.append(frozenset(current))
    return GenerationTrace(seed_set, tuple(stages), producer)


def closure(a: MultiAlgebra, seed: Iterable[str]) -> frozenset[str]:
    """The final stage of `generate`, without trace bookkeeping."""
    seed_set = frozenset(seed)
    stray = seed_set - set(a.universe)
    if stray:
        raise SeedOutsideUniverse(f"seed elements outside the universe: {sorted(stray)}")
    current = set(seed_set)
    pending = []
    for app, result in a.applications():
        if app.args:
            pending.append((app.args, result))
        else:
            current |= result
    changed = True
    while changed:
        changed = False
        remaining = []
        for args, result in pending:
            if all(x in current for x in args):
                if not result <= current:
                    current |= result
                    changed = True
            else:
                remaining.append((args, result))
        pending = remaining
    return frozenset(current)


@dataclass(frozen=True)
class GroundGeneration:
    """Whether the ground generates the whole universe, with its trace."""

    ok: bool
    trace: GenerationTrace

    def __bool__(self) -> bool:
        return self.ok


def is_generated_by_ground(a: MultiAlgebra) -> GroundGeneration:
    trace = generate(a, ground(a))
    return GroundGeneration(trace.final == frozenset(a.universe), trace)


@dataclass(frozen=True)
class OverlapWitness:
    """Two distinct defined applications sharing a result element."""

    app1: Application
    app2: Application
    shared: str


def is_disconnected(a: MultiAlgebra) -> Check:
    """True when distinct defined applications have disjoint result sets."""
    owner: dict[str, Application] = {}
    for app, result in a.applications():
        for x in sorted(result):
            first = owner.get(x)
            if first is None:
                owner[x] = app
            elif first != app:
                return Check(False, OverlapWitness(first, app, x))
    return Check(True)


def verify_overlap_witness(a: MultiAlgebra, w: OverlapWitness) -> bool:
    """Re-check an overlap witness against the structure it came from."""
    if Application(*w.app1) == Application(*w.app2):
        return False
    r1 = a.apply(w.app1.symbol, w.app1.args)
    r2 = a.apply(w.app2.symbol, w.app2.args)
    return r1 is not None and r2 is not None and w.shared in r1 and w.shared in r2


@dataclass(frozen=True)
class BasisCertificate:
    """Per-element co-generation checks behind a strong-basis verdict.

    `co_generation_checks[x]` records whether the universe minus x still
    generates everything; the candidate basis collects exactly the elements
    whose check failed, i.e. the elements no generating set can avoid.
    """

    basis: frozenset[str]
    co_generation_checks: Mapping[str, bool]


def strong_basis(a: MultiAlgebra) -> tuple[frozenset[str] | None, BasisCertificate]:
    """The minimum generating set when one exists.

    An element belongs to every generating set exactly when removing it
    from the universe breaks generation, so the intersection of all
    generating sets is computable with |A| closure runs.  That intersection
    is the minimum iff it generates; otherwise no minimum exists and the
    verdict is None.  The certificate carries the candidate and all checks
    either way.
    """
    full = frozenset(a.universe)
    checks = {x: closure(a, full - {x}) == full for x in a.universe}
    candidate = frozenset(x for x, still_generates in checks.items() if not still_generates)
    certificate = BasisCertificate(candidate, checks)
    if closure(a, candidate) == full:
        return candidate, certificate
    return None, certificate


def b_order(a: MultiAlgebra, basis: Iterable[str], element: str) -> int:
    """Least generation stage at which `element` appears over `basis`.

    The basis must generate the whole universe (NotGenerating otherwise);
    any universe element then has a stage (ElementOutsideClosure guards the
    degenerate case of a foreign element).
    """
    trace = generate(a, basis)
    if trace.final != frozenset(a.universe):
        raise NotGenerating(f"{sorted(frozenset(basis))} does not generate the universe")
    stage = trace.stage_of(element)
    if stage is None:
        raise ElementOutsideClosure(f"{element!r} is outside the generated closure")
    return stage
