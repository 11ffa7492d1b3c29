"""Choice oracles, cdf extensions, direct images, embeddings, UMP demo."""

from __future__ import annotations

import itertools
import random

import pytest

from multialg import (
    ElementMap,
    MultiAlgebra,
    Signature,
    corestrict,
    direct_image,
    embed_into_terms,
    extend_cdf,
    injective_greedy,
    is_homomorphism,
    is_isomorphism,
    is_submultialgebra,
    lexicographic_first,
    m_of,
    oracle_from_table,
    seeded_random,
    truncate_mt,
    ump_refutation_demo,
)
from multialg.errors import (
    InjectiveChoiceUnavailable,
    NoDefinedApplications,
    NotHomomorphism,
    NotWeaklyFree,
    OracleRangeViolation,
    SignatureMismatch,
    UndefinedTargetApplication,
)
from multialg.hom import ChoiceOracle
from multialg.structure import generate, ground

from instances import random_total, random_weakly_free_fragment
from oracles import all_element_maps

SIG_S = Signature({"s": 1})


def test_extend_into_collapse(collapse):
    # one variable, two superscripted successors, both forced onto 1
    source = truncate_mt(SIG_S, ["x"], 2, 1)
    ext = extend_cdf(source, {"x": "0"}, collapse, lexicographic_first(source, collapse))
    assert ext.map.mapping == {"x": "0", "s^0(x)": "1", "s^1(x)": "1"}
    assert is_homomorphism(ext.map)
    assert ext.seed_map == {"x": "0"}
    # the one consulted application, replayed
    assert ext.oracle.consulted == {("s", ("x",), ("0",), "s^0(x)"): "1",
                                    ("s", ("x",), ("0",), "s^1(x)"): "1"}


def test_extend_requires_weakly_free(flip, collapse, absval):
    target = collapse
    with pytest.raises(NotWeaklyFree) as err:
        extend_cdf(flip, {}, target, lexicographic_first(flip, target))
    assert err.value.clause == "ground-generated"
    with pytest.raises(NotWeaklyFree) as err:
        extend_cdf(collapse, {"0": "0"}, target, lexicographic_first(collapse, target))
    assert err.value.clause == "disconnected"
    with pytest.raises(NotWeaklyFree) as err:
        extend_cdf(absval, {"-1": "0"}, target, lexicographic_first(absval, target))
    assert err.value.clause == "disconnected"


def test_extend_validates_inputs(forest, collapse, classical):
    with pytest.raises(SignatureMismatch):
        extend_cdf(forest, {"x": "0"}, classical.algebra,
                   lexicographic_first(forest, classical.algebra))
    # oracle bound to the wrong pair
    with pytest.raises(ValueError):
        extend_cdf(forest, {"x": "0"}, collapse, lexicographic_first(collapse, collapse))
    # seed map must cover the ground exactly
    with pytest.raises(ValueError):
        extend_cdf(forest, {}, collapse, lexicographic_first(forest, collapse))
    with pytest.raises(ValueError):
        extend_cdf(forest, {"x": "0", "u": "0"}, collapse, lexicographic_first(forest, collapse))
    with pytest.raises(ValueError):
        extend_cdf(forest, {"x": "7"}, collapse, lexicographic_first(forest, collapse))


def test_extend_hits_undefined_target_application(forest):
    # forest's own s(u) is undefined, so pushing x onto u dead-ends
    source = truncate_mt(SIG_S, ["x"], 1, 1)
    oracle = lexicographic_first(source, forest)
    with pytest.raises(UndefinedTargetApplication):
        extend_cdf(source, {"x": "u"}, forest, oracle)


def test_oracle_range_violation(collapse):
    source = truncate_mt(SIG_S, ["x"], 1, 1)

    def rogue(symbol, source_args, target_args, element, candidates):
        return "0"

    oracle = ChoiceOracle(source, collapse, rogue, "rogue")
    with pytest.raises(OracleRangeViolation):
        extend_cdf(source, {"x": "0"}, collapse, oracle)


def test_oracle_from_table_drives_extension(forest):
    source = truncate_mt(SIG_S, ["x"], 2, 1)
    entries = {
        ("s", ("x",), ("x",)): {"s^0(x)": "v", "s^1(x)": "u"},
    }
    oracle = oracle_from_table(source, forest, entries)
    ext = extend_cdf(source, {"x": "x"}, forest, oracle)
    assert ext.map.mapping == {"x": "x", "s^0(x)": "v", "s^1(x)": "u"}
    missing = oracle_from_table(source, forest, {})
    with pytest.raises(ValueError):
        extend_cdf(source, {"x": "x"}, forest, missing)


def test_seeded_random_is_reproducible():
    rng = random.Random(501)
    for _ in range(20):
        a = random_weakly_free_fragment(rng)
        b = random_total(rng, sig=a.signature, max_size=3)
        f = {x: sorted(b.universe)[0] for x in ground(a)}
        first = extend_cdf(a, f, b, seeded_random(a, b, seed=9)).map
        second = extend_cdf(a, f, b, seeded_random(a, b, seed=9)).map
        assert first == second


def test_injective_greedy_overflow(forest):
    # forest branches two ways, a single-choice truncation cannot keep up
    target = truncate_mt(SIG_S, ["x"], 1, 1)
    oracle = injective_greedy(forest, target)
    with pytest.raises(InjectiveChoiceUnavailable):
        extend_cdf(forest, {"x": "x"}, target, oracle)


def test_extension_is_unique_among_oracle_consistent_homomorphisms():
    # enumerate every element map and re-check the defining property
    rng = random.Random(502)
    done = 0
    while done < 25:
        a = random_weakly_free_fragment(rng, max_size=4)
        if len(a.universe) > 4:
            continue
        b = random_total(rng, sig=a.signature, max_size=3)
        seed = ground(a)
        f = {x: sorted(b.universe)[done % len(b.universe)] for x in seed}
        try:
            ext = extend_cdf(a, f, b, seeded_random(a, b, seed=done))
        except UndefinedTargetApplication:
            continue
        trace = generate(a, seed)
        checker = seeded_random(a, b, seed=done)
        matches = []
        for mapping in all_element_maps(a, b):
            if any(mapping[x] != f[x] for x in seed):
                continue
            g = ElementMap(a, b, mapping)
            if not is_homomorphism(g):
                continue
            consistent = True
            for element, producer in trace.producer.items():
                target_args = tuple(mapping[x] for x in producer.args)
                try:
                    wanted = checker.answer(producer.symbol, producer.args, target_args, element)
                except UndefinedTargetApplication:
                    consistent = False
                    break
                if mapping[element] != wanted:
                    consistent = False
                    break
            if consistent:
                matches.append(mapping)
        assert matches == [ext.map.mapping]
        done += 1


def test_direct_image_of_swap_is_flip(flip):
    swap = ElementMap(flip, flip, {"-1": "1", "1": "-1"})
    assert direct_image(swap) == flip


def test_direct_image_collapses_to_point(collapse):
    const = ElementMap(collapse, collapse, {"0": "1", "1": "1"})
    img = direct_image(const)
    assert img.universe == ("1",)
    assert img.apply("s", ("1",)) == {"1"}
    assert is_submultialgebra(img, collapse)


def test_direct_image_requires_homomorphism(flip, collapse):
    not_hom = ElementMap(flip, collapse, {"-1": "0", "1": "0"})
    with pytest.raises(NotHomomorphism):
        direct_image(not_hom)


def test_direct_image_is_submultialgebra_of_target():
    rng = random.Random(503)
    checked = 0
    for _ in range(40):
        a = random_weakly_free_fragment(rng, max_size=4)
        b = random_total(rng, sig=a.signature, max_size=3)
        f = {x: sorted(b.universe)[0] for x in ground(a)}
        try:
            ext = extend_cdf(a, f, b, lexicographic_first(a, b))
        except UndefinedTargetApplication:
            continue
        img = direct_image(ext.map)
        assert is_submultialgebra(img, b)
        assert corestrict(ext.map, img).is_surjective()
        checked += 1
    assert checked > 20


def test_m_of(flip, collapse, forest):
    assert m_of(flip) == 1
    assert m_of(collapse) == 1
    assert m_of(forest) == 2
    empty = MultiAlgebra(SIG_S, ["x"], {})
    with pytest.raises(NoDefinedApplications):
        m_of(empty)


def test_embed_forest(forest):
    emb = embed_into_terms(forest)
    assert emb.kappa == 2
    assert emb.depth == 1
    assert emb.map.mapping == {"x": "x", "u": "s^0(x)", "v": "s^1(x)"}
    assert emb.map.is_injective()
    img = direct_image(emb.map)
    assert is_isomorphism(corestrict(emb.map, img))


def test_embed_ground_only_structure():
    # nothing generated: the embedding is the identity on variables
    a = MultiAlgebra(SIG_S, ["p", "q"], {})
    emb = embed_into_terms(a)
    assert emb.kappa == 1 and emb.depth == 0
    assert emb.map.mapping == {"p": "p", "q": "q"}


def test_embed_rejects_non_weakly_free(flip):
    with pytest.raises(NotWeaklyFree):
        embed_into_terms(flip)


def test_embedding_lands_inside_the_stated_truncation():
    rng = random.Random(504)
    for _ in range(30):
        a = random_weakly_free_fragment(rng)
        emb = embed_into_terms(a)
        expect = truncate_mt(a.signature, ground(a), emb.kappa, emb.depth)
        assert emb.target == expect
        assert emb.map.is_injective()
        img = direct_image(emb.map)
        assert is_isomorphism(corestrict(emb.map, img))
        assert is_submultialgebra(img, emb.target)


def test_ump_demo_on_unary_signature():
    demo = ump_refutation_demo(SIG_S, ("x",), depth=2)
    report = demo.report
    assert report.agree_on_variables
    assert report.differ_on_all_composites
    assert report.both_homomorphisms
    assert report.variables == ("x",)
    # source has 3 terms, 2 composite: s^0(x) and its iterate
    assert len(report.rows) == 2
    seen = dict((row[0], (row[1], row[2])) for row in report.rows)
    assert seen["s^0(x)"] == ("s^0(x)", "s^1(x)")


def test_ump_demo_on_binary_signature():
    demo = ump_refutation_demo(Signature({"g": 2}), ("x", "y"), depth=1)
    report = demo.report
    assert report.agree_on_variables
    assert report.differ_on_all_composites
    assert report.both_homomorphisms
    # 4 ordered variable pairs, one composite each in the single-choice source
    assert len(report.rows) == 4


def test_ump_demo_input_validation():
    with pytest.raises(ValueError):
        ump_refutation_demo(SIG_S, ("x",), depth=0)
    from multialg.errors import EmptySignature
    with pytest.raises(EmptySignature):
        ump_refutation_demo(Signature({}), ("x",), depth=1)
