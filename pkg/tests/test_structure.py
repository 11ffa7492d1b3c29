"""Build/ground sets, generation traces, disconnectedness, strong bases."""

from __future__ import annotations

import itertools
import random

import pytest

from multialg import (
    Application,
    MultiAlgebra,
    Signature,
    b_order,
    build,
    closure,
    generate,
    ground,
    is_disconnected,
    is_generated_by_ground,
    strong_basis,
    verify_overlap_witness,
)
from multialg.errors import ElementOutsideClosure, NotGenerating, SeedOutsideUniverse

from instances import random_partial
from oracles import brute_generating_sets, brute_strong_basis


def test_build_and_ground_golden_values(flip, collapse, absval, forest):
    assert build(flip) == {"-1", "1"}
    assert ground(flip) == frozenset()

    assert build(collapse) == {"1"}
    assert ground(collapse) == {"0"}

    assert build(absval) == {"0", "1"}
    assert ground(absval) == {"-1"}

    assert build(forest) == {"u", "v"}
    assert ground(forest) == {"x"}


def test_ground_of_shared_tail(shared_tail):
    assert ground(shared_tail) == {"a", "b"}


def test_generate_stages_on_collapse(collapse):
    trace = generate(collapse, {"0"})
    assert [set(s) for s in trace.stages] == [{"0"}, {"0", "1"}]
    assert trace.stage_of("0") == 0
    assert trace.stage_of("1") == 1
    assert trace.producer["1"] == ("s", ("0",), 1)
    assert "1" in trace and "2" not in trace


def test_generate_empty_seed_on_flip(flip):
    # no nullary operations, so nothing ever fires from an empty seed
    trace = generate(flip, ())
    assert trace.stages == (frozenset(),)
    assert trace.final == frozenset()


def test_generate_rejects_foreign_seed(flip):
    with pytest.raises(SeedOutsideUniverse):
        generate(flip, {"7"})


def test_nullary_results_enter_stage_zero():
    a = MultiAlgebra(
        Signature({"c": 0, "s": 1}),
        ["0", "1"],
        {("c", ()): {"0"}, ("s", ("0",)): {"1"}},
    )
    trace = generate(a, ())
    assert [set(s) for s in trace.stages] == [{"0"}, {"0", "1"}]
    assert trace.producer["0"].stage == 0
    assert trace.producer["0"].symbol == "c"


def test_each_application_fires_once():
    # s(0) = {0, 1}: the self-feeding application must not loop forever
    a = MultiAlgebra(Signature({"s": 1}), ["0", "1"], {("s", ("0",)): {"0", "1"}})
    trace = generate(a, {"0"})
    assert trace.final == {"0", "1"}
    assert len(trace.stages) == 2


def test_closure_matches_generate_final(shared_tail, absval, forest):
    for a in (shared_tail, absval, forest):
        for size in range(len(a.universe) + 1):
            for seed in itertools.combinations(a.universe, size):
                assert closure(a, seed) == generate(a, seed).final


def test_closure_is_monotone_and_idempotent(shared_tail):
    small = closure(shared_tail, {"a"})
    large = closure(shared_tail, {"a", "b"})
    assert small <= large
    assert closure(shared_tail, small) == small


def test_is_generated_by_ground_goldens(flip, collapse, absval):
    assert not is_generated_by_ground(flip)
    assert is_generated_by_ground(collapse)
    gg = is_generated_by_ground(absval)
    assert not gg
    # the ground {-1} only ever reaches {-1, 1}
    assert gg.trace.final == {"-1", "1"}


def test_disconnected_goldens(flip, collapse, absval, forest):
    assert is_disconnected(flip)
    assert is_disconnected(forest)

    check = is_disconnected(collapse)
    assert not check
    w = check.witness
    assert {w.app1, w.app2} == {
        Application("s", ("0",)),
        Application("s", ("1",)),
    }
    assert w.shared == "1"
    assert verify_overlap_witness(collapse, w)

    # s(-1) and s(1) both land on 1, so the absolute-value structure overlaps too
    check = is_disconnected(absval)
    assert not check
    assert check.witness.shared == "1"
    assert verify_overlap_witness(absval, check.witness)


def test_overlap_witness_verification_rejects_garbage(collapse, flip):
    check = is_disconnected(collapse)
    w = check.witness
    assert not verify_overlap_witness(flip, w)
    fake = type(w)(w.app1, w.app1, w.shared)
    assert not verify_overlap_witness(collapse, fake)


def test_strong_basis_goldens(flip, collapse, absval, shared_tail):
    basis, cert = strong_basis(flip)
    assert basis is None
    # every singleton removal still generates: {-1} and {1} each generate all
    assert cert.co_generation_checks == {"-1": True, "1": True}
    assert cert.basis == frozenset()

    basis, cert = strong_basis(collapse)
    assert basis == {"0"}
    assert cert.co_generation_checks == {"0": False, "1": True}

    # absval has a basis even though ground generation fails
    basis, _ = strong_basis(absval)
    assert basis == {"-1", "0"}

    basis, _ = strong_basis(shared_tail)
    assert basis == {"a", "b"}


def test_generating_sets_of_flip_are_all_nonempty_subsets(flip):
    got = set(brute_generating_sets(flip))
    assert got == {frozenset({"-1"}), frozenset({"1"}), frozenset({"-1", "1"})}


def test_strong_basis_agrees_with_subset_enumeration():
    rng = random.Random(2203)
    for _ in range(300):
        a = random_partial(rng, max_size=6)
        ours, cert = strong_basis(a)
        theirs = brute_strong_basis(a)
        assert ours == theirs
        if ours is not None:
            # the basis is contained in every generating set
            for g in brute_generating_sets(a):
                assert ours <= g
            assert closure(a, ours) == frozenset(a.universe)
            assert cert.basis == ours


def test_ground_meets_every_closure_inside_the_seed():
    # G(A) ∩ <S> ⊆ S, exhaustively over all seeds of small instances
    rng = random.Random(907)
    for _ in range(40):
        a = random_partial(rng, max_size=6)
        g = ground(a)
        elements = sorted(a.universe)
        for size in range(len(elements) + 1):
            for seed in itertools.combinations(elements, size):
                seed_set = frozenset(seed)
                assert g & closure(a, seed_set) <= seed_set


def test_ground_is_contained_in_every_generating_set():
    rng = random.Random(908)
    for _ in range(60):
        a = random_partial(rng, max_size=6)
        g = ground(a)
        for gen in brute_generating_sets(a):
            assert g <= gen


def test_b_order_on_collapse(collapse):
    assert b_order(collapse, {"0"}, "0") == 0
    assert b_order(collapse, {"0"}, "1") == 1


def test_b_order_on_shared_tail(shared_tail):
    basis, _ = strong_basis(shared_tail)
    assert b_order(shared_tail, basis, "a") == 0
    assert b_order(shared_tail, basis, "0") == 1
    assert b_order(shared_tail, basis, "5") == 6


def test_b_order_requires_a_generating_seed(absval):
    with pytest.raises(NotGenerating):
        b_order(absval, ground(absval), "0")


def test_b_order_rejects_foreign_element(collapse):
    with pytest.raises(ElementOutsideClosure):
        b_order(collapse, {"0"}, "9")
    with pytest.raises(SeedOutsideUniverse):
        b_order(collapse, {"9"}, "0")


def test_build_shrinks_under_submultialgebra_restriction(shared_tail):
    # dropping table rows can only shrink the build set
    rows = {app: result for app, result in shared_tail.applications()}
    some = dict(list(rows.items())[:3])
    smaller = MultiAlgebra(shared_tail.signature, shared_tail.universe, some)
    assert build(smaller) <= build(shared_tail)
    assert ground(shared_tail) <= ground(smaller)
