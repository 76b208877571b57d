"""
Acyclicity tests: gamma-cycle search, alpha-acyclicity by GYO reduction and
beta-acyclicity by testing every edge subset.

``find_gamma_cycle`` and ``is_beta_acyclic`` are exhaustive and guarded by the
sizes configured in :mod:`src.config`.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from src.config import settings
from src.exceptions import SizeGuardExceeded
from src.hypergraph.hypergraph import EdgeId, Hypergraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GammaCycle:
    """Alternating sequence e1, x1, ..., en, xn of a gamma-cycle."""
    edges: Tuple[EdgeId, ...]
    vertices: Tuple[int, ...]


def find_gamma_cycle(h: Hypergraph, max_edges: Optional[int] = None) -> Optional[GammaCycle]:
    """Exhaustively search for a gamma-cycle.

    For i < n the vertex x_i lies in e_i and e_{i+1} and in no other edge of
    the cycle; x_n lies in e_n and e_1.  Edges and vertices are distinct and
    n >= 3.
    """
    limit = settings.GAMMA_CYCLE_MAX_EDGES if max_edges is None else max_edges
    if h.num_edges > limit:
        raise SizeGuardExceeded(f"gamma-cycle search limited to {limit} edges, got {h.num_edges}")
    edges = h.edge_sets
    ids = h.edge_ids

    def search(path: List[EdgeId], xs: List[int]) -> Optional[GammaCycle]:
        last = path[-1]
        if len(path) >= 3:
            closing = (edges[last] & edges[path[0]]).difference(xs)
            if closing:
                return GammaCycle(tuple(path), tuple(xs) + (min(closing),))
        used = set(xs)
        for f in ids:
            if f in path or edges[f] & used:
                continue
            for x in sorted(edges[last] & edges[f]):
                if any(x in edges[e] for e in path[:-1]):
                    continue
                found = search(path + [f], xs + [x])
                if found is not None:
                    return found
        return None

    for start in ids:
        found = search([start], [])
        if found is not None:
            logger.debug(f"gamma-cycle found: {found}")
            return found
    return None


def is_alpha_acyclic(h: Hypergraph, edge_ids: Optional[Iterable[EdgeId]] = None) -> bool:
    """GYO reduction on ``h`` (or its sub-hypergraph on ``edge_ids``).

    An ear is an edge whose vertices shared with other live edges all lie in
    one of them, or which shares none.  Ears are removed until none is left;
    the hypergraph is alpha-acyclic iff every edge gets removed.
    """
    ids = h.edge_ids if edge_ids is None else sorted(edge_ids)
    live: Dict[EdgeId, FrozenSet[int]] = {eid: h.edge_sets[eid] for eid in ids}
    holders: Dict[int, Set[EdgeId]] = {}
    for eid, vertices in live.items():
        for v in vertices:
            holders.setdefault(v, set()).add(eid)

    deletion_sequence: List[EdgeId] = []
    witness_of: Dict[EdgeId, EdgeId] = {}
    pending = deque(sorted(live))
    queued = set(pending)
    while pending:
        eid = pending.popleft()
        queued.discard(eid)
        if eid not in live:
            continue
        shared = {v for v in live[eid] if len(holders[v]) > 1}
        witness = _witness(eid, shared, live, holders)
        if shared and witness is None:
            continue
        if witness is not None:
            witness_of[eid] = witness
        deletion_sequence.append(eid)
        del live[eid]
        for v in h.edge_sets[eid]:
            holders[v].discard(eid)
            for other in holders[v] - queued:
                queued.add(other)
                pending.append(other)
    logger.debug(f"GYO deletion sequence {deletion_sequence}, witnesses {witness_of}, {len(live)} edges left")
    return not live


def _witness(eid: EdgeId, shared: Set[int], live: Dict[EdgeId, FrozenSet[int]], holders: Dict[int, Set[EdgeId]]) -> Optional[EdgeId]:
    """Another live edge containing every shared vertex of ``eid``."""
    if not shared:
        return None
    pivot = min(shared, key=lambda v: len(holders[v]))
    for other in sorted(holders[pivot]):
        if other != eid and shared <= live[other]:
            return other
    return None


def is_beta_acyclic(h: Hypergraph, max_edges: Optional[int] = None) -> bool:
    """Alpha-test on every sub-family of at least three edges."""
    limit = settings.BETA_MAX_EDGES if max_edges is None else max_edges
    if h.num_edges > limit:
        raise SizeGuardExceeded(f"beta-acyclicity test limited to {limit} edges, got {h.num_edges}")
    ids = h.edge_ids
    for size in range(3, len(ids) + 1):
        for subset in combinations(ids, size):
            if not is_alpha_acyclic(h, subset):
                logger.debug(f"alpha-cyclic edge subset {subset}")
                return False
    return True
