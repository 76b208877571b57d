"""
Validators for join trees, disjoint branches decompositions and join-path orders.
"""

from __future__ import annotations

import logging
from typing import Dict, FrozenSet, List, Sequence

from src.exceptions import HypergraphError, InvalidDecomposition
from src.hypergraph.decomposition import Decomposition
from src.hypergraph.hypergraph import EdgeId, Hypergraph

logger = logging.getLogger(__name__)


def _check_nodes(h: Hypergraph, d: Decomposition) -> None:
    if set(d.nodes) != set(h.edge_sets):
        missing = set(h.edge_sets) - set(d.nodes)
        extra = set(d.nodes) - set(h.edge_sets)
        raise HypergraphError(f"decomposition nodes do not match edges (missing={sorted(missing)}, extra={sorted(extra)})")


def is_join_tree(h: Hypergraph, d: Decomposition) -> bool:
    """True iff, for every vertex, the nodes containing it induce a connected subtree.

    A vertex contained in ``c`` nodes is connected exactly when ``c - 1``
    tree edges join two of those nodes.
    """
    _check_nodes(h, d)
    links: Dict[int, int] = {}
    for node, parent in d.parents.items():
        if parent is None:
            continue
        for v in h.edge_sets[node] & h.edge_sets[parent]:
            links[v] = links.get(v, 0) + 1
    for v, eids in h.incidence.items():
        if links.get(v, 0) != len(eids) - 1:
            logger.debug(f"vertex {h.label(v)} is disconnected in the tree")
            return False
    return True


def is_disjoint_branches(h: Hypergraph, d: Decomposition) -> bool:
    """True iff every two nodes on different branches have disjoint edges.

    Raises InvalidDecomposition if ``d`` is not a join tree of ``h``.
    """
    if not is_join_tree(h, d):
        raise InvalidDecomposition("not a join tree")
    intervals = d.intervals
    for v, eids in h.incidence.items():
        ordered = sorted(eids, key=lambda eid: intervals[eid][0])
        for upper, lower in zip(ordered, ordered[1:]):
            if not d.is_ancestor(upper, lower):
                logger.debug(f"vertex {h.label(v)} occurs on two branches ({upper}, {lower})")
                return False
    return True


def is_valid_decomposition(h: Hypergraph, d: Decomposition) -> bool:
    """Join tree and disjoint branches, without raising on either failure."""
    try:
        return is_join_tree(h, d) and is_disjoint_branches(h, d)
    except InvalidDecomposition:
        return False


def check_join_path_order(h: Hypergraph, order: Sequence[EdgeId]) -> bool:
    """True iff, for all e before f before g, every vertex of e and g is in f.

    Equivalently, the positions of the edges containing each vertex are
    consecutive.
    """
    if len(order) != len(h.edge_sets) or set(order) != set(h.edge_sets):
        raise HypergraphError("order is not a permutation of the edges")
    return is_consecutive_arrangement([h.edge_sets[eid] for eid in order])


def is_consecutive_arrangement(vertex_sets: Sequence[FrozenSet[int]]) -> bool:
    first: Dict[int, int] = {}
    last: Dict[int, int] = {}
    count: Dict[int, int] = {}
    for position, vertices in enumerate(vertex_sets):
        for v in vertices:
            first.setdefault(v, position)
            last[v] = position
            count[v] = count.get(v, 0) + 1
    return all(last[v] - first[v] + 1 == count[v] for v in count)


def sibling_subtrees_disjoint(h: Hypergraph, d: Decomposition) -> bool:
    """True iff subtrees hanging off the same node cover disjoint vertex sets."""
    _check_nodes(h, d)
    below: Dict[EdgeId, FrozenSet[int]] = {}
    for node in reversed(d.preorder):
        parts: List[FrozenSet[int]] = [below[c] for c in d.children[node]]
        seen: set = set()
        for part in parts:
            if seen & part:
                return False
            seen |= part
        below[node] = h.edge_sets[node].union(seen)
    return True
