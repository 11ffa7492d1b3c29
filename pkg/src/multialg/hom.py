"""Choice oracles, canonical extensions, direct images and term embeddings.

A map on the ground of a weakly free structure extends to a homomorphism in
exactly one way once a choice oracle fixes, per application, which target
value each produced element takes.  The extension is built stage by stage
along the generation trace; the same machinery embeds any weakly free
structure into a truncated term multialgebra and refutes uniqueness of
extensions when no oracle is pinned down.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Mapping

from .core import (
    Application,
    ElementMap,
    MultiAlgebra,
    Signature,
    is_homomorphism,
)
from .errors import (
    EmptySignature,
    InjectiveChoiceUnavailable,
    NoDefinedApplications,
    NotHomomorphism,
    NotWeaklyFree,
    OracleRangeViolation,
    SignatureMismatch,
    UndefinedTargetApplication,
)
from .structure import GroundGeneration, ground, is_disconnected, is_generated_by_ground
from .terms import Node, term_universe, truncate_mt

Chooser = Callable[[str, tuple[str, ...], tuple[str, ...], str, tuple[str, ...]], str]


class ChoiceOracle:
    """Resolves, per application, where each produced element goes.

    `answer` receives the source application, the image of its argument
    tuple and one element of its result set, and returns an element of the
    corresponding target result set.  Answers are memoized so a finished
    extension can be replayed against the exact choices that built it.
    """

    def __init__(self, source: MultiAlgebra, target: MultiAlgebra, chooser: Chooser, name: str):
        self.source = source
        self.target = target
        self.name = name
        self.consulted: dict[tuple[str, tuple[str, ...], tuple[str, ...], str], str] = {}
        self._chooser = chooser

    def answer(
        self,
        symbol: str,
        source_args: tuple[str, ...],
        target_args: tuple[str, ...],
        element: str,
    ) -> str:
        key = (symbol, tuple(source_args), tuple(target_args), element)
        if key in self.consulted:
            return self.consulted[key]
        result = self.target.apply(symbol, key[2])
        if result is None:
            raise UndefinedTargetApplication(
                f"target application {Application(symbol, key[2])} is undefined"
            )
        value = self._chooser(symbol, key[1], key[2], element, tuple(sorted(result)))
        if value not in result:
            raise OracleRangeViolation(
                f"oracle answered {value!r} outside {Application(symbol, key[2])}"
            )
        self.consulted[key] = value
        return value

    def __repr__(self) -> str:
        return f"ChoiceOracle({self.name})"


def lexicographic_first(source: MultiAlgebra, target: MultiAlgebra) -> ChoiceOracle:
    """Always pick the least element of the target result set."""

    def choose(symbol, source_args, target_args, element, candidates):
        return candidates[0]

    return ChoiceOracle(source, target, choose, "first")


def injective_greedy(source: MultiAlgebra, target: MultiAlgebra) -> ChoiceOracle:
    """Match source and target result sets positionally, in universe order.

    Injective on every application whose source result set is no larger
    than its target; errors out otherwise.
    """

    def choose(symbol, source_args, target_args, element, candidates):
        source_result = source.apply(symbol, source_args)
        if source_result is None or element not in source_result:
            raise ValueError(f"{element!r} is not produced by {Application(symbol, source_args)}")
        ranked = sorted(source_result)
        if len(ranked) > len(candidates):
            raise InjectiveChoiceUnavailable(
                f"{Application(symbol, source_args)} has {len(ranked)} results, "
                f"target offers only {len(candidates)}"
            )
        return candidates[ranked.index(element)]

    return ChoiceOracle(source, target, choose, "injective")


def seeded_random(source: MultiAlgebra, target: MultiAlgebra, seed: int) -> ChoiceOracle:
    """Pick pseudo-randomly but reproducibly: the seed plus the full query
    determine the answer, so replays agree across runs and platforms."""

    def choose(symbol, source_args, target_args, element, candidates):
        key = f"{seed}|{symbol}|{','.join(source_args)}|{','.join(target_args)}|{element}"
        return random.Random(key).choice(candidates)

    return ChoiceOracle(source, target, choose, f"random({seed})")


def oracle_from_table(
    source: MultiAlgebra,
    target: MultiAlgebra,
    entries: Mapping[tuple[str, tuple[str, ...], tuple[str, ...]], Mapping[str, str]],
) -> ChoiceOracle:
    """Answer from an explicit table of per-application choice functions."""

    def choose(symbol, source_args, target_args, element, candidates):
        try:
            return entries[(symbol, source_args, target_args)][element]
        except KeyError:
            raise ValueError(
                f"explicit oracle has no entry for {Application(symbol, source_args)} / {element!r}"
            ) from None

    return ChoiceOracle(source, target, choose, "table")


@dataclass(frozen=True)
class CdfExtension:
    """A choice-driven extension: the homomorphism, its oracle and its seed."""

    map: ElementMap
    oracle: ChoiceOracle
    seed_map: Mapping[str, str]


def _require_weakly_free(a: MultiAlgebra) -> GroundGeneration:
    disconnected = is_disconnected(a)
    if not disconnected:
        raise NotWeaklyFree("disconnected", disconnected.witness)
    generated = is_generated_by_ground(a)
    if not generated:
        raise NotWeaklyFree("ground-generated", generated.trace)
    return generated


def extend_cdf(
    a: MultiAlgebra, f: Mapping[str, str], b: MultiAlgebra, oracle: ChoiceOracle
) -> CdfExtension:
    """Extend a ground assignment to the unique oracle-consistent homomorphism.

    `a` must be weakly free and `f` must assign every ground element a value
    in `b`.  Disconnectedness makes each produced element's application
    unique, so walking the generation trace and asking the oracle once per
    produced element defines the whole map; the result extends `f`, is a
    homomorphism, and is the only one agreeing with the oracle's choices.
    """
    if a.signature != b.signature:
        raise SignatureMismatch("source and target interpret different signatures")
    if oracle.source != a or oracle.target != b:
        raise ValueError("oracle is bound to different structures")
    generated = _require_weakly_free(a)
    seed = ground(a)
    f = dict(f)
    if set(f) != set(seed):
        raise ValueError(
            f"seed map must cover exactly the ground {sorted(seed)}, got {sorted(f)}"
        )
    targets = set(b.universe)
    for x, y in f.items():
        if y not in targets:
            raise ValueError(f"seed value {y!r} for {x!r} is outside the target universe")

    mapping: dict[str, str] = {}
    for stage in generated.trace.stages:
        for element in sorted(stage):
            if element in mapping:
                continue
            if element in seed:
                mapping[element] = f[element]
                continue
            producer = generated.trace.producer[element]
            target_args = tuple(mapping[x] for x in producer.args)
            mapping[element] = oracle.answer(producer.symbol, producer.args, target_args, element)
    return CdfExtension(ElementMap(a, b, mapping), oracle, f)


def direct_image(f: ElementMap) -> MultiAlgebra:
    """The image structure a homomorphism induces on its image set.

    Each application over image elements collects the images of all source
    result sets sitting over it; the outcome is a submultialgebra of the
    target, and f corestricted to it is surjective.
    """
    verdict = is_homomorphism(f)
    if not verdict:
        raise NotHomomorphism(verdict.witness)
    image = sorted(f.image())
    table: dict[tuple[str, tuple[str, ...]], set[str]] = {}
    for app, result in f.source.applications():
        key = (app.symbol, f.apply_tuple(app.args))
        table.setdefault(key, set()).update(f(x) for x in result)
    out = MultiAlgebra(f.source.signature, image, table)
    if out.is_table_total():
        out = MultiAlgebra(f.source.signature, image, table, total=True)
    return out


def corestrict(f: ElementMap, c: MultiAlgebra) -> ElementMap:
    """The same mapping viewed into a smaller target structure."""
    return ElementMap(f.source, c, f.mapping)


def m_of(a: MultiAlgebra) -> int:
    """Largest result-set cardinality over all defined applications."""
    sizes = [len(result) for _, result in a.applications()]
    if not sizes:
        raise NoDefinedApplications("no defined applications, maximum does not exist")
    return max(sizes)


@dataclass(frozen=True)
class TermEmbedding:
    """An isomorphic copy of a weakly free structure inside a truncation."""

    kappa: int
    depth: int
    map: ElementMap

    @property
    def target(self) -> MultiAlgebra:
        return self.map.target


def embed_into_terms(a: MultiAlgebra) -> TermEmbedding:
    """Embed a weakly free structure into a truncated term multialgebra.

    Ground elements become variables named after themselves; kappa is the
    largest result-set size, the depth the largest generation stage.  The
    embedding is the injective-greedy extension of the identity on the
    ground, and is a full homomorphism onto its direct image.
    """
    generated = _require_weakly_free(a)
    seed = ground(a)
    try:
        kappa = m_of(a)
    except NoDefinedApplications:
        kappa = 1
    depth = len(generated.trace.stages) - 1
    target = truncate_mt(a.signature, seed, kappa, depth)
    extension = extend_cdf(a, {x: x for x in seed}, target, injective_greedy(a, target))
    return TermEmbedding(kappa, depth, extension.map)


@dataclass(frozen=True)
class UmpReport:
    """Comparison of two oracle-driven extensions of one variable assignment."""

    variables: tuple[str, ...]
    rows: tuple[tuple[str, str, str], ...]
    agree_on_variables: bool
    differ_on_all_composites: bool
    both_homomorphisms: bool


@dataclass(frozen=True)
class UmpDemo:
    first: CdfExtension
    second: CdfExtension
    report: UmpReport


def _fixed_superscript_oracle(
    source: MultiAlgebra, target: MultiAlgebra, terms_by_id: Mapping[str, Node], beta: int
) -> ChoiceOracle:
    def choose(symbol, source_args, target_args, element, candidates):
        for candidate in candidates:
            if terms_by_id[candidate].superscript == beta:
                return candidate
        raise ValueError(f"no candidate with superscript {beta} in {candidates}")

    return ChoiceOracle(source, target, choose, f"superscript({beta})")


def ump_refutation_demo(sig: Signature, variables: tuple[str, ...], depth: int) -> UmpDemo:
    """Two distinct homomorphisms extending the same variable assignment.

    The plain term structure (one choice per application) maps into the
    two-choice truncation via the identity on variables; resolving every
    application with superscript 0 or with superscript 1 gives two
    extensions that agree exactly on the variables and differ on every
    composite term, so no single extension can be canonical.
    """
    if not sig.symbols:
        raise EmptySignature("need at least one operation symbol")
    if depth < 1:
        raise ValueError("depth must be at least 1")
    source = truncate_mt(sig, variables, 1, depth)
    target = truncate_mt(sig, variables, 2, depth)
    terms_by_id = term_universe(sig, variables, 2, depth)
    assignment = {v: v for v in variables}

    first = extend_cdf(a=source, f=assignment, b=target,
                       oracle=_fixed_superscript_oracle(source, target, terms_by_id, 0))
    second = extend_cdf(a=source, f=assignment, b=target,
                        oracle=_fixed_superscript_oracle(source, target, terms_by_id, 1))

    names = tuple(sorted(variables))
    composites = tuple(x for x in source.universe if x not in set(names))
    rows = tuple((x, first.map(x), second.map(x)) for x in composites)
    report = UmpReport(
        variables=names,
        rows=rows,
        agree_on_variables=all(first.map(v) == second.map(v) for v in names),
        differ_on_all_composites=all(left != right for _, left, right in rows),
        both_homomorphisms=bool(is_homomorphism(first.map)) and bool(is_homomorphism(second.map)),
    )
    return UmpDemo(first, second, report)
