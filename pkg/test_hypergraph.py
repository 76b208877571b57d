from itertools import combinations

import networkx as nx
import pytest

from src.exceptions import HypergraphError, InvalidDecomposition, SizeGuardExceeded
from src.hypergraph.acyclicity import find_gamma_cycle, is_alpha_acyclic, is_beta_acyclic
from src.hypergraph.components import connected_components, is_connected, remove_edge, remove_edges, split_components
from src.hypergraph.decomposition import Decomposition, join_forest
from src.hypergraph.hypergraph import Hypergraph
from src.hypergraph.union_find import UnionFind
from src.hypergraph.validators import (
    check_join_path_order,
    is_disjoint_branches,
    is_join_tree,
    is_valid_decomposition,
    sibling_subtrees_disjoint,
)
from src.testkit.generators import hn_hypergraph, random_hypergraph


def test_from_edge_sets_merges_duplicate_sets():
    h = Hypergraph.from_edge_sets([["a", "b"], ["b", "c"], ["b", "a"]])
    assert h.num_edges == 2
    assert h.edge_sets == {0: frozenset({0, 1}), 1: frozenset({1, 2})}
    assert h.sources == {0: (0, 2), 1: (1,)}
    assert h.labels == ("a", "b", "c")
    assert h.edge_id_for({1, 2}) == 1
    assert h.edge_id_for({0, 2}) is None


def test_empty_edge_is_rejected():
    with pytest.raises(HypergraphError):
        Hypergraph.from_edge_sets([["a"], []])


def test_unknown_edge_id(chain):
    with pytest.raises(HypergraphError):
        chain.edge(7)
    with pytest.raises(HypergraphError):
        chain.restrict([0, 7])


def test_incidence_lists_sorted_edge_ids(chain):
    assert chain.incidence == {0: (0,), 1: (0, 1), 2: (1, 2), 3: (2,)}


def test_restrict_keeps_ids(chain):
    sub = chain.restrict([1, 2])
    assert sub.edge_sets == {1: frozenset({1, 2}), 2: frozenset({2, 3})}
    assert sub.vertices == frozenset({1, 2, 3})
    assert sub.label(3) == "d"


def test_union_find():
    uf = UnionFind(range(4))
    uf.union(0, 1)
    uf.union(2, 3)
    assert uf.find(0) == uf.find(1)
    assert uf.find(1) != uf.find(2)
    uf.union(1, 3)
    assert len({uf.find(i) for i in range(4)}) == 1
    assert 4 not in uf


def test_connected_components_examples():
    assert len(connected_components(Hypergraph.from_edge_sets([[0, 1], [2, 3]]))) == 2
    assert len(connected_components(Hypergraph.from_edge_sets([[0, 1], [1, 2]]))) == 1
    assert is_connected(hn_hypergraph(5))


def test_components_are_ordered_by_smallest_edge():
    h = Hypergraph.from_edge_sets([[5, 6], [0, 1], [6, 7], [1, 2]])
    views = connected_components(h)
    assert [sorted(v.edge_ids) for v in views] == [[0, 2], [1, 3]]
    assert views[1].index == 1
    assert views[1].vertices == h.edge_sets[1] | h.edge_sets[3]


def test_components_agree_with_union_find(rng):
    for _ in range(200):
        h = random_hypergraph(rng, rng.randint(1, 10), rng.randint(2, 12))
        subset = rng.sample(list(h.edge_ids), rng.randint(0, h.num_edges))
        uf = UnionFind(subset)
        for a in subset:
            for b in subset:
                if h.edge_sets[a] & h.edge_sets[b]:
                    uf.union(a, b)
        groups = {}
        for eid in subset:
            groups.setdefault(uf.find(eid), set()).add(eid)
        expected = sorted(groups.values(), key=min)
        assert [set(v.edge_ids) for v in connected_components(h, subset)] == expected


def test_remove_edge_drops_vertices_only_in_that_edge():
    h = Hypergraph.from_edge_sets([["a", "b"], ["b", "c"]])
    rest = remove_edge(h, 0)
    assert rest.edge_sets == {1: frozenset({1, 2})}
    assert rest.vertices == frozenset({1, 2})
    assert remove_edge(Hypergraph.from_edge_sets([["a"]]), 0).num_edges == 0

    nested = Hypergraph.from_edge_sets([["a", "b"], ["a", "b", "c"]])
    assert remove_edge(nested, 0).vertices == nested.vertices


def test_remove_edges(chain):
    assert remove_edges(chain, []).edge_sets == chain.edge_sets
    assert remove_edges(chain, chain.edge_ids).num_edges == 0
    assert len(connected_components(remove_edges(chain, [1]))) == 2
    with pytest.raises(HypergraphError):
        remove_edges(chain, [9])


def test_remove_edges_is_order_independent(rng):
    for _ in range(50):
        h = random_hypergraph(rng, 7, 6)
        drop = rng.sample(list(h.edge_ids), 3)
        one_by_one = h
        for eid in drop:
            one_by_one = remove_edge(one_by_one, eid)
        assert one_by_one.edge_sets == remove_edges(h, reversed(drop)).edge_sets


def test_split_components_matches_connected_components(rng):
    for trial in range(200):
        h = random_hypergraph(rng, rng.randint(2, 12), rng.randint(3, 10))
        removed = set(rng.sample(list(h.edge_ids), rng.randint(1, h.num_edges)))
        live = frozenset(h.edge_ids) - removed
        seeds = {v for e in removed for v in h.edge_sets[e]}
        expected = connected_components(h, live) if live else []
        if any(not c.vertices & seeds for c in expected):
            continue
        parts = split_components(h, live, seeds)
        assert [p.edge_ids for p in parts] == [c.edge_ids for c in expected], f"trial {trial}"
        assert [p.boundary for p in parts] == [c.vertices & seeds for c in expected], f"trial {trial}"


def test_join_tree_examples(chain):
    assert is_join_tree(chain, Decomposition.from_path([0, 1, 2]))
    assert not is_join_tree(chain, Decomposition.from_path([0, 2, 1]))
    single = Hypergraph.from_edge_sets([["a", "b"]])
    assert is_join_tree(single, Decomposition.single(0))


def test_join_tree_requires_matching_nodes(chain):
    with pytest.raises(HypergraphError):
        is_join_tree(chain, Decomposition.from_path([0, 1]))


def test_disjoint_branches_examples(chain):
    assert is_disjoint_branches(chain, Decomposition.from_path([2, 1, 0]))

    good = Hypergraph.from_edge_sets([["a", "b"], ["a", "c"], ["b", "d"]])
    assert is_disjoint_branches(good, Decomposition.from_parents({0: None, 1: 0, 2: 0}))
    assert sibling_subtrees_disjoint(good, Decomposition.from_parents({0: None, 1: 0, 2: 0}))

    bad = Hypergraph.from_edge_sets([["a"], ["a", "b"], ["b", "c"]])
    star = Decomposition.from_parents({0: None, 1: 0, 2: 0})
    assert not is_valid_decomposition(bad, star)
    with pytest.raises(InvalidDecomposition):
        is_disjoint_branches(bad, star)


def test_join_tree_with_shared_vertex_on_two_branches():
    h = Hypergraph.from_edge_sets([["a", "b"], ["a", "b", "c"], ["b", "c"]])
    star = Decomposition.from_parents({1: None, 0: 1, 2: 1})
    assert is_join_tree(h, star)
    assert not is_disjoint_branches(h, star)
    assert not sibling_subtrees_disjoint(h, star)


def test_decomposition_structure():
    d = Decomposition.from_parents({3: None, 1: 3, 0: 1, 2: 3})
    assert d.root == 3
    assert d.children[3] == (1, 2)
    assert d.preorder == (3, 1, 0, 2)
    assert d.is_ancestor(3, 0) and d.is_ancestor(1, 1) and not d.is_ancestor(2, 0)
    assert len(d) == 4


def test_decomposition_rejects_bad_parent_maps():
    with pytest.raises(HypergraphError):
        Decomposition.from_parents({0: None, 1: None})
    with pytest.raises(HypergraphError):
        Decomposition.from_parents({0: None, 1: 2, 2: 1})
    with pytest.raises(HypergraphError):
        Decomposition.from_path([0, 1, 0])


def test_join_forest_hangs_roots_under_the_first():
    h = Hypergraph.from_edge_sets([["a", "b"], ["b", "c"], ["x", "y"], ["y", "z"]])
    d = join_forest([Decomposition.from_path([0, 1]), Decomposition.from_path([3, 2])])
    assert d.parents == {0: None, 1: 0, 3: 0, 2: 3}
    assert is_valid_decomposition(h, d)


def test_check_join_path_order(chain):
    assert check_join_path_order(chain, [0, 1, 2])
    assert not check_join_path_order(chain, [1, 0, 2])
    disjoint = Hypergraph.from_edge_sets([[0], [1], [2]])
    assert check_join_path_order(disjoint, [2, 0, 1])
    with pytest.raises(HypergraphError):
        check_join_path_order(chain, [0, 1])


def test_join_path_order_matches_path_join_tree(rng):
    from itertools import permutations

    for _ in range(40):
        h = random_hypergraph(rng, rng.randint(2, 5), 5)
        for order in permutations(h.edge_ids):
            assert check_join_path_order(h, order) == is_join_tree(h, Decomposition.from_path(order))


def test_gamma_cycle_examples(chain, triangle):
    found = find_gamma_cycle(triangle)
    assert found is not None and len(found.edges) == 3
    assert find_gamma_cycle(chain) is None
    assert find_gamma_cycle(Hypergraph.from_edge_sets([["a", "b"]])) is None


def test_gamma_cycle_with_nested_edges():
    h = Hypergraph.from_edge_sets([["a", "b"], ["a", "b", "c"], ["b", "c"]])
    assert find_gamma_cycle(h) is not None
    assert is_beta_acyclic(h)


def test_gamma_cycle_size_guard():
    h = Hypergraph.from_edge_sets([[i, i + 1] for i in range(12)])
    with pytest.raises(SizeGuardExceeded):
        find_gamma_cycle(h)
    assert find_gamma_cycle(h, max_edges=12) is None


def test_alpha_and_beta(chain, triangle, covered_triangle):
    assert is_alpha_acyclic(chain) and is_beta_acyclic(chain)
    assert not is_alpha_acyclic(triangle) and not is_beta_acyclic(triangle)
    assert is_alpha_acyclic(covered_triangle)
    assert not is_beta_acyclic(covered_triangle)
    assert is_alpha_acyclic(Hypergraph.from_edge_sets([["a", "b"], ["c", "d"]]))


def test_alpha_acyclic_iff_maximum_weight_tree_is_a_join_tree(rng):
    for _ in range(300):
        h = random_hypergraph(rng, rng.randint(1, 7), rng.randint(2, 7))
        if not is_connected(h):
            continue
        g = nx.Graph()
        g.add_nodes_from(h.edge_ids)
        for a, b in combinations(h.edge_ids, 2):
            shared = len(h.edge_sets[a] & h.edge_sets[b])
            if shared:
                g.add_edge(a, b, weight=shared)
        tree = nx.maximum_spanning_tree(g)
        root = h.edge_ids[0]
        parents = {root: None}
        parents.update(dict(nx.bfs_predecessors(tree, root)))
        d = Decomposition.from_parents(parents)
        assert is_alpha_acyclic(h) == is_join_tree(h, d), f"{h.edge_sets}"


def test_hn_is_gamma_acyclic():
    for n in (2, 3, 4):
        assert find_gamma_cycle(hn_hypergraph(n)) is None
