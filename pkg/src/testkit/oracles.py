"""
Exhaustive oracles for small inputs.

Labeled trees on the edge set are enumerated through Prüfer sequences, so
``m`` edges give ``m^(m-2)`` trees; the size guard keeps ``m`` at desk
scale.
"""

from __future__ import annotations

import logging
from itertools import permutations, product
from typing import Dict, Iterable, Iterator, List, Optional, Set, Tuple

import networkx as nx

from src.config import settings
from src.exceptions import SizeGuardExceeded
from src.hypergraph.decomposition import Decomposition
from src.hypergraph.hypergraph import EdgeId, Hypergraph
from src.hypergraph.validators import is_consecutive_arrangement, is_disjoint_branches
from src.pqtree.tree import Frontier

logger = logging.getLogger(__name__)


def _guard(h: Hypergraph, max_edges: Optional[int]) -> None:
    limit = settings.EXHAUSTIVE_SEARCH_MAX_EDGES if max_edges is None else max_edges
    if h.num_edges > limit:
        raise SizeGuardExceeded(f"exhaustive search limited to {limit} edges, got {h.num_edges}")


def _labeled_trees(m: int) -> Iterator[List[Tuple[int, int]]]:
    if m == 1:
        yield []
        return
    if m == 2:
        yield [(0, 1)]
        return
    for sequence in product(range(m), repeat=m - 2):
        yield list(nx.from_prufer_sequence(list(sequence)).edges())


def _join_trees(h: Hypergraph) -> Iterator[nx.Graph]:
    """Trees on the edges of ``h`` in which every vertex induces a connected subtree."""
    ids = list(h.edge_ids)
    masks = [sum(1 << v for v in h.edge_sets[eid]) for eid in ids]
    # a tree is a join tree iff every vertex is shared along (occurrences - 1) tree edges
    needed = sum(bin(mask).count("1") for mask in masks) - len(h.vertices)
    for tree_edges in _labeled_trees(len(ids)):
        shared = sum(bin(masks[a] & masks[b]).count("1") for a, b in tree_edges)
        if shared != needed:
            continue
        tree = nx.Graph()
        tree.add_nodes_from(ids)
        tree.add_edges_from((ids[a], ids[b]) for a, b in tree_edges)
        yield tree


def _rooted(tree: nx.Graph, root: EdgeId) -> Decomposition:
    parents: Dict[EdgeId, Optional[EdgeId]] = {root: None}
    parents.update(dict(nx.bfs_predecessors(tree, root)))
    return Decomposition.from_parents(parents)


def exhaustive_db_search(
    h: Hypergraph, root: Optional[EdgeId] = None, max_edges: Optional[int] = None
) -> Optional[Decomposition]:
    """First disjoint branches decomposition of ``h`` found among all rooted labeled trees."""
    _guard(h, max_edges)
    roots = list(h.edge_ids) if root is None else [root]
    for tree in _join_trees(h):
        for r in roots:
            d = _rooted(tree, r)
            if is_disjoint_branches(h, d):
                return d
    return None


def exhaustive_db_roots(h: Hypergraph, max_edges: Optional[int] = None) -> Set[EdgeId]:
    """Every edge at which some disjoint branches decomposition of ``h`` is rooted."""
    _guard(h, max_edges)
    found: Set[EdgeId] = set()
    for tree in _join_trees(h):
        for r in h.edge_ids:
            if r not in found and is_disjoint_branches(h, _rooted(tree, r)):
                found.add(r)
        if len(found) == h.num_edges:
            break
    return found


def brute_force_frontiers(h: Hypergraph, a: Iterable[EdgeId], max_edges: int = 8) -> Set[Frontier]:
    """Orders of ``a`` in which the edges containing each vertex are consecutive."""
    ids = sorted(set(a))
    if len(ids) > max_edges:
        raise SizeGuardExceeded(f"permutation search limited to {max_edges} edges, got {len(ids)}")
    return {
        order for order in permutations(ids) if is_consecutive_arrangement([h.edge_sets[e] for e in order])
    }
