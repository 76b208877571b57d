import random

import pytest

from src.exceptions import HypergraphError, RejectReason, Rejection, SizeGuardExceeded
from src.hypergraph.hypergraph import Hypergraph
from src.pqtree.builder import build_pq_tree
from src.pqtree.surgery import PQFSubtreeRef, force, force_within, locate_subtree, restrict_inclusion_order
from src.pqtree.tree import NodeKind, PQFTree, enumerate_frontiers, make
from src.testkit.generators import random_hypergraph, random_pqf_tree
from src.testkit.oracles import brute_force_frontiers


def frontiers(text):
    return enumerate_frontiers(PQFTree.from_text(text))


def test_text_round_trip():
    text = "(P 0 (Q 1 2 3) (F 4 5))"
    assert PQFTree.from_text(text).to_text() == text
    with pytest.raises(ValueError):
        PQFTree.from_text("(P 0 1")


def test_make_normalizes():
    a, b, c = (PQFTree.leaf(i) for i in range(3))
    assert make(NodeKind.Q, [a, b]).kind is NodeKind.P
    assert make(NodeKind.P, [a]) is a
    flat = make(NodeKind.F, [make(NodeKind.F, [a, b]), c])
    assert flat.to_text() == "(F 0 1 2)"
    assert flat.is_normal()


def test_enumerate_frontiers_examples():
    assert frontiers("7") == {(7,)}
    assert frontiers("(F 0 1)") == {(0, 1)}
    assert frontiers("(Q 0 1 2)") == {(0, 1, 2), (2, 1, 0)}
    assert len(frontiers("(P 0 1 2)")) == 6


def test_count_frontiers_matches_enumeration(rng):
    for _ in range(100):
        t = random_pqf_tree(rng, rng.randint(1, 6))
        assert t.count_frontiers() == len(enumerate_frontiers(t))
        assert t.is_normal()


def test_frontier_guard():
    t = PQFTree.from_text("(P 0 1 2 3 4 5 6 7)")
    with pytest.raises(SizeGuardExceeded):
        enumerate_frontiers(t, limit=100)


def test_leftmost_frontier():
    assert PQFTree.from_text("(P 3 (Q 0 1 2) (F 5 4))").frontier() == (3, 0, 1, 2, 5, 4)


def test_build_chain(chain):
    t = build_pq_tree(chain, chain.edge_ids)
    assert t.to_text() == "(Q 0 1 2)"
    assert enumerate_frontiers(t) == {(0, 1, 2), (2, 1, 0)}


def test_build_disjoint_edges():
    h = Hypergraph.from_edge_sets([["a"], ["b"], ["c"]])
    t = build_pq_tree(h, h.edge_ids)
    assert t.kind is NodeKind.P
    assert len(enumerate_frontiers(t)) == 6


def test_build_rejects_triangle(triangle):
    with pytest.raises(Rejection) as info:
        build_pq_tree(triangle, triangle.edge_ids)
    assert info.value.reason is RejectReason.NO_JOIN_PATH


def test_build_single_edge_and_empty_set(chain):
    assert build_pq_tree(chain, [1]) == PQFTree.leaf(1)
    with pytest.raises(HypergraphError):
        build_pq_tree(chain, [])


def test_build_matches_brute_force(rng):
    for trial in range(200):
        h = random_hypergraph(rng, rng.randint(2, 7), rng.randint(3, 7), max_edge_size=4)
        expected = brute_force_frontiers(h, h.edge_ids)
        if not expected:
            with pytest.raises(Rejection):
                build_pq_tree(h, h.edge_ids)
            continue
        t = build_pq_tree(h, h.edge_ids)
        assert not t.has_f_nodes()
        assert t.leaves == frozenset(h.edge_ids)
        assert enumerate_frontiers(t) == expected, f"trial {trial}: {h.edge_sets} -> {t}"


def test_frontiers_without_f_nodes_are_closed_under_reversal(rng):
    for _ in range(100):
        h = random_hypergraph(rng, rng.randint(2, 6), 6)
        try:
            t = build_pq_tree(h, h.edge_ids)
        except Rejection:
            continue
        found = enumerate_frontiers(t)
        assert {f[::-1] for f in found} == found


def test_locate_subtree_examples(chain):
    t = build_pq_tree(chain, chain.edge_ids)
    ref = locate_subtree(t, chain, {1})
    assert ref == PQFSubtreeRef((), (0, 1))
    assert ref.leaves(t) == {0, 1}
    assert locate_subtree(t, chain, {0}) == PQFSubtreeRef((0,))

    star = Hypergraph.from_edge_sets([["x", "a"], ["x", "b"], ["x", "c"]])
    s = build_pq_tree(star, star.edge_ids)
    assert locate_subtree(s, star, {0}) == PQFSubtreeRef()

    with pytest.raises(HypergraphError):
        locate_subtree(t, chain, {0, 3})


def test_locate_subtree_leaves_are_the_containing_edges(rng):
    for _ in range(100):
        h = random_hypergraph(rng, rng.randint(2, 7), 6, max_edge_size=4)
        try:
            t = build_pq_tree(h, h.edge_ids)
        except Rejection:
            continue
        for eid in h.edge_ids:
            vertices = set(rng.sample(sorted(h.edge_sets[eid]), rng.randint(1, len(h.edge_sets[eid]))))
            ref = locate_subtree(t, h, vertices)
            assert ref.leaves(t) == {e for e in h.edge_ids if vertices <= h.edge_sets[e]}


def test_force_examples():
    t = PQFTree.from_text("(F 0 1)")
    assert enumerate_frontiers(force(t, PQFSubtreeRef((1,)))) == {(0, 1)}

    t = PQFTree.from_text("(P 0 1)")
    forced = force(t, PQFSubtreeRef((1,)))
    assert forced.to_text() == "(F 0 1)"

    t = PQFTree.from_text("(Q 0 1 2)")
    assert enumerate_frontiers(force(t, PQFSubtreeRef((), (1, 2)))) == {(0, 1, 2)}
    assert enumerate_frontiers(force(t, PQFSubtreeRef((), (0, 1)))) == {(2, 1, 0)}


def test_force_rejects_inner_positions():
    with pytest.raises(Rejection) as info:
        force(PQFTree.from_text("(Q 0 1 2)"), PQFSubtreeRef((1,)))
    assert info.value.reason is RejectReason.EMPTY_RESTRICTION
    with pytest.raises(Rejection):
        force(PQFTree.from_text("(F 0 1)"), PQFSubtreeRef((0,)))


def _random_ref(rng, t):
    path = []
    node = t
    while not node.is_leaf and rng.random() < 0.6:
        index = rng.randrange(len(node.children))
        path.append(index)
        node = node.children[index]
    k = len(node.children)
    if node.kind in (NodeKind.Q, NodeKind.F) and k >= 3 and rng.random() < 0.5:
        lo = rng.randrange(k - 1)
        hi = rng.randrange(lo + 1, k)
        if (lo, hi) != (0, k - 1):
            return PQFSubtreeRef(tuple(path), (lo, hi))
    return PQFSubtreeRef(tuple(path))


def test_force_postcondition_by_enumeration(rng):
    for trial in range(200):
        t = random_pqf_tree(rng, rng.randint(1, 7))
        s = _random_ref(rng, t)
        inner = enumerate_frontiers(s.as_tree(t))
        size = len(s.leaves(t))
        expected = {f for f in enumerate_frontiers(t) if f[len(f) - size:] in inner}
        if not expected:
            with pytest.raises(Rejection):
                force(t, s)
            continue
        result = force(t, s)
        assert result.is_normal()
        assert result.leaves == t.leaves
        assert enumerate_frontiers(result) == expected, f"trial {trial}: {t} at {s}"


def test_force_within_scope():
    t = PQFTree.from_text("(P 9 (Q 0 1 2 3))")
    scope = PQFSubtreeRef((1,), (0, 2))
    result = force_within(t, scope, PQFSubtreeRef((1, 0)))
    assert enumerate_frontiers(result) == {(9, 3, 2, 1, 0), (3, 2, 1, 0, 9)}
    with pytest.raises(HypergraphError):
        force_within(t, scope, PQFSubtreeRef((0,)))


def test_restrict_inclusion_order_examples():
    h = Hypergraph.from_edge_sets([["x"], ["x", "y"], ["x", "y", "z"]])
    t = PQFTree.from_text("(Q 0 1 2)")
    assert enumerate_frontiers(restrict_inclusion_order(t, h, {1, 2})) == {(0, 1, 2)}
    assert restrict_inclusion_order(t, h, {0}) == t

    other = Hypergraph.from_edge_sets([["x"], ["x", "y"], ["x", "y", "z"], ["w"]])
    assert restrict_inclusion_order(t, other, {3}) == t


def test_restrict_inclusion_order_by_enumeration(rng):
    checked = 0
    for trial in range(300):
        h = random_hypergraph(rng, rng.randint(2, 6), 6, max_edge_size=4)
        try:
            t = build_pq_tree(h, h.edge_ids)
        except Rejection:
            continue
        vset = frozenset(rng.sample(sorted(h.vertices), rng.randint(1, 3)))
        traces = sorted({h.edge_sets[e] & vset for e in h.edge_ids} - {frozenset()}, key=len)
        if any(not a <= b for a, b in zip(traces, traces[1:])):
            continue

        def grows(order):
            seen = [h.edge_sets[e] & vset for e in order if h.edge_sets[e] & vset]
            return all(a <= b for a, b in zip(seen, seen[1:]))

        expected = {f for f in enumerate_frontiers(t) if grows(f)}
        if not expected:
            with pytest.raises(Rejection):
                restrict_inclusion_order(t, h, vset)
            continue
        result = restrict_inclusion_order(t, h, vset)
        assert enumerate_frontiers(result) == expected, f"trial {trial}: {h.edge_sets} on {set(vset)}"
        checked += 1
    assert checked > 50
