import random
from itertools import permutations

import pytest

from src.counter.transform import to_disjunctive
from src.decomposer.compute_db import compute_db, find_decomposition, rootable_edges
from src.decomposer.separator import Separator, compute_separator, validate_separator
from src.exceptions import HypergraphError, NotDecomposable, RejectReason, Rejection
from src.hypergraph.acyclicity import find_gamma_cycle
from src.hypergraph.components import is_connected
from src.hypergraph.hypergraph import Hypergraph
from src.hypergraph.validators import is_valid_decomposition
from src.testkit.generators import (
    GeneratorConfig,
    edge_families,
    edge_families_up_to_isomorphism,
    gen_db_instance,
    hn_hypergraph,
    random_hypergraph,
)
from src.testkit.oracles import exhaustive_db_roots


def test_separator_with_a_single_touching_edge():
    h = Hypergraph.from_edge_sets([["x"], ["x", "y"], ["y", "z"]])
    sep = compute_separator(h, {0, 1})
    assert set(sep.order) == {0, 1}
    assert validate_separator(h, {0, 1}, sep.order)


def test_separator_orders_growing_traces():
    h = Hypergraph.from_edge_sets([["x", "y"], ["x", "y", "w"], ["y", "w", "z"]])
    assert compute_separator(h, {0, 1}).order == (0, 1)
    assert validate_separator(h, {0, 1}, (0, 1))
    assert not validate_separator(h, {0, 1}, (1, 0))
    assert not validate_separator(h, {0, 1}, (0,))


def test_separator_rejects_incomparable_traces():
    h = Hypergraph.from_edge_sets([["x", "z"], ["x", "y"], ["y", "z"]])
    with pytest.raises(Rejection) as info:
        compute_separator(h, {0, 1})
    assert info.value.reason is RejectReason.TRACE_NOT_CHAIN


def test_separator_rejects_edge_sets_without_join_path(triangle):
    with pytest.raises(Rejection) as info:
        compute_separator(triangle, triangle.edge_ids)
    assert info.value.reason is RejectReason.NO_JOIN_PATH
    with pytest.raises(HypergraphError):
        compute_separator(triangle, [])


def test_computed_separators_validate(rng):
    for _ in range(200):
        h = random_hypergraph(rng, rng.randint(2, 7), 6)
        a = set(rng.sample(list(h.edge_ids), rng.randint(1, min(4, h.num_edges))))
        orders = [p for p in permutations(sorted(a)) if validate_separator(h, a, p)]
        if not orders:
            with pytest.raises(Rejection):
                compute_separator(h, a)
            continue
        assert compute_separator(h, a).order in orders


def test_compute_db_chain(chain):
    assert compute_db(chain, 0).parents == {0: None, 1: 0, 2: 1}
    assert compute_db(chain, 1).root == 1


def test_compute_db_single_edge_and_bad_input(chain):
    single = Hypergraph.from_edge_sets([["a", "b"]])
    assert compute_db(single, 0).parents == {0: None}
    with pytest.raises(HypergraphError):
        compute_db(chain, 5)
    with pytest.raises(HypergraphError):
        compute_db(Hypergraph.from_edge_sets([["a"], ["b"]]), 0)


def test_nested_edges_are_rootable_only_at_the_ends():
    h = Hypergraph.from_edge_sets([["a", "b"], ["a", "b", "c"], ["b", "c"]])
    assert rootable_edges(h) == [0, 2]
    with pytest.raises(Rejection) as info:
        compute_db(h, 1)
    assert info.value.reason is RejectReason.EMPTY_COVER


def test_triangle_is_not_decomposable(triangle):
    for root in triangle.edge_ids:
        with pytest.raises(Rejection):
            compute_db(triangle, root)
    assert rootable_edges(triangle) == []
    with pytest.raises(NotDecomposable) as info:
        find_decomposition(triangle)
    assert info.value.component == 0


def test_rejection_below_the_root_is_wrapped():
    h = Hypergraph.from_edge_sets([["p"], ["p", "a"], ["a", "b"], ["b", "c"], ["a", "c"]])
    with pytest.raises(Rejection) as info:
        compute_db(h, 0)
    assert info.value.reason is RejectReason.RECURSION_FAILURE
    assert info.value.cause is RejectReason.TRACE_NOT_CHAIN


def test_hn_is_rootable_everywhere():
    for n in (3, 10):
        h = hn_hypergraph(n)
        for root in h.edge_ids:
            assert is_valid_decomposition(h, compute_db(h, root))


def test_hn_50_is_rootable_everywhere():
    h = hn_hypergraph(50)
    for root in h.edge_ids:
        assert len(compute_db(h, root)) == 100


def test_find_decomposition_per_component(chain):
    h = Hypergraph.from_edge_sets([["a", "b"], ["b", "c"], ["x", "y"]])
    trees = find_decomposition(h)
    assert [t.root for t in trees] == [0, 2]

    mixed = Hypergraph.from_edge_sets([["a", "b"], ["b", "c"], ["c", "d"], ["p", "q"], ["q", "r"], ["p", "r"]])
    with pytest.raises(NotDecomposable) as info:
        find_decomposition(mixed)
    assert info.value.component == 1


def test_generated_instances_are_decomposable():
    for seed in range(100):
        inst, _ = gen_db_instance(GeneratorConfig(seed=seed, edges=12))
        h = to_disjunctive(inst).hypergraph
        (d,) = find_decomposition(h)
        assert is_valid_decomposition(h, d)


def _compare_with_exhaustive(h):
    expected = exhaustive_db_roots(h)
    rootable = rootable_edges(h)
    assert set(rootable) == expected, f"{h.edge_sets}"
    assert (find_gamma_cycle(h) is None) == (rootable == list(h.edge_ids)), f"{h.edge_sets}"


def test_rootable_edges_match_exhaustive_search_on_four_vertices():
    for family in edge_families(4, 4):
        h = Hypergraph.from_edge_sets([sorted(edge) for edge in family])
        if is_connected(h):
            _compare_with_exhaustive(h)


def test_rootable_edges_match_exhaustive_search_on_six_edges(rng):
    checked = 0
    while checked < 200:
        h = random_hypergraph(rng, 6, rng.randint(4, 6))
        if h.num_edges != 6 or not is_connected(h):
            continue
        _compare_with_exhaustive(h)
        checked += 1


def test_gamma_acyclic_iff_rootable_everywhere(rng):
    for _ in range(300):
        h = random_hypergraph(rng, rng.randint(1, 6), rng.randint(3, 6))
        if not is_connected(h):
            continue
        everywhere = rootable_edges(h) == list(h.edge_ids)
        assert (find_gamma_cycle(h) is None) == everywhere, f"{h.edge_sets}"


def _random_valid_separator(seed):
    picker = random.Random(seed)

    def strategy(g, cover):
        orders = list(permutations(sorted(cover)))
        picker.shuffle(orders)
        for order in orders:
            if validate_separator(g, cover, order):
                return Separator(order)
        raise Rejection(RejectReason.NO_JOIN_PATH, "no valid order of the cover")

    return strategy


def test_any_valid_separator_gives_a_decomposition(rng):
    for trial in range(150):
        h = random_hypergraph(rng, rng.randint(2, 7), rng.randint(3, 7))
        if not is_connected(h):
            continue
        for root in h.edge_ids:
            try:
                compute_db(h, root)
            except Rejection:
                with pytest.raises(Rejection):
                    compute_db(h, root, separator=_random_valid_separator(trial))
                continue
            d = compute_db(h, root, separator=_random_valid_separator(trial))
            assert d.root == root
            assert is_valid_decomposition(h, d)


@pytest.mark.slow
def test_families_on_six_vertices_up_to_isomorphism():
    checked = 0
    for family in edge_families_up_to_isomorphism(6, 5):
        h = Hypergraph.from_edge_sets([sorted(edge) for edge in family])
        if not is_connected(h):
            continue
        _compare_with_exhaustive(h)
        checked += 1
    assert checked > 1000


@pytest.mark.slow
def test_generated_corpus_is_decomposable_at_every_witness_root():
    for seed in range(2000):
        inst, witness = gen_db_instance(GeneratorConfig(seed=seed, edges=30, branching=3))
        h = to_disjunctive(inst).hypergraph
        assert is_valid_decomposition(h, compute_db(h, witness.root))
