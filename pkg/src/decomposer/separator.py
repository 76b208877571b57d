"""
A-separators.

An A-separator of a hypergraph is a join path ``a1 ... ak`` of the edge set
``A`` such that, for every component ``C`` of the hypergraph without ``A``,
the traces ``ai ∩ V_C`` never shrink along the path once they are non-empty.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import AbstractSet, FrozenSet, Iterable, List, Sequence, Set, Tuple

from src.exceptions import HypergraphError, RejectReason, Rejection
from src.hypergraph.components import ComponentPart, connected_components, split_components
from src.hypergraph.hypergraph import EdgeId, Hypergraph
from src.hypergraph.validators import is_consecutive_arrangement
from src.pqtree.builder import build_pq_tree
from src.pqtree.surgery import restrict_inclusion_order

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Separator:
    order: Tuple[EdgeId, ...]

    def __iter__(self):
        return iter(self.order)

    def __len__(self) -> int:
        return len(self.order)


def boundary_vertices(h: Hypergraph, a: Iterable[EdgeId], live: AbstractSet[EdgeId]) -> Set[int]:
    """Vertices of the edges ``a`` that also occur in some live edge."""
    incidence = h.incidence
    found: Set[int] = set()
    for eid in a:
        for v in h.edge_sets[eid]:
            if v not in found and any(f in live for f in incidence[v]):
                found.add(v)
    return found


def compute_separator(h: Hypergraph, a: Iterable[EdgeId]) -> Separator:
    """An A-separator of ``h`` for the edge set ``a``.

    Raises Rejection with reason NO_JOIN_PATH, TRACE_NOT_CHAIN or
    EMPTY_RESTRICTION when none exists.
    """
    edges = frozenset(a)
    if not edges:
        raise HypergraphError("separator edge set is empty")
    h.check_edge_ids(edges)
    live = frozenset(h.edge_sets) - edges
    parts = split_components(h, live, boundary_vertices(h, edges, live))
    return separator_from_parts(h, edges, parts)


def separator_from_parts(h: Hypergraph, a: FrozenSet[EdgeId], parts: Sequence[ComponentPart]) -> Separator:
    """Separator for ``a`` given the components of the remaining edges.

    Each part's ``boundary`` must be the set of vertices it shares with the
    edges of ``a``.
    """
    tree = build_pq_tree(h, a)
    for part in parts:
        traces = {h.edge_sets[e] & part.boundary for e in a}
        traces.discard(frozenset())
        chain = sorted(traces, key=len)
        if any(not small <= large for small, large in zip(chain, chain[1:])):
            raise Rejection(
                RejectReason.TRACE_NOT_CHAIN,
                f"traces of component at edge {part.min_edge} are not an inclusion chain",
            )
        tree = restrict_inclusion_order(tree, h, part.boundary)
    return Separator(tree.frontier())


def validate_separator(h: Hypergraph, a: Iterable[EdgeId], p: Sequence[EdgeId]) -> bool:
    """Direct check of both separator conditions for the order ``p``."""
    edges = frozenset(a)
    order = list(p)
    if len(order) != len(edges) or set(order) != edges:
        return False
    if not is_consecutive_arrangement([h.edge(e) for e in order]):
        return False
    for component in connected_components(h, set(h.edge_sets) - edges):
        previous: FrozenSet[int] = frozenset()
        for e in order:
            trace = h.edge_sets[e] & component.vertices
            if not trace:
                continue
            if not previous <= trace:
                return False
            previous = trace
    return True
