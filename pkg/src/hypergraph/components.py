"""
Connected components and edge deletion.

``connected_components`` runs networkx over the edge-vertex incidence graph.
``split_components`` answers the same question for the recursion in
ComputeDB, where the caller already knows the boundary vertices through
which every component touches the removed edges: it explores the components
from those vertices in round-robin and stops as soon as a single search is
still running, whose component is then the complement of the others.  On a
long join path this keeps each level proportional to the small side of the
split instead of the whole remaining hypergraph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import AbstractSet, Deque, Dict, FrozenSet, Iterable, List, Optional, Set

import networkx as nx

from src.hypergraph.hypergraph import EdgeId, Hypergraph
from src.hypergraph.union_find import UnionFind


@dataclass(frozen=True)
class ComponentView:
    index: int
    vertices: FrozenSet[int]
    edge_ids: FrozenSet[EdgeId]


@dataclass(frozen=True)
class ComponentPart:
    """A component of a split together with the seed vertices it contains."""
    edge_ids: FrozenSet[EdgeId]
    boundary: FrozenSet[int]

    @property
    def min_edge(self) -> EdgeId:
        return min(self.edge_ids)


def connected_components(h: Hypergraph, edge_ids: Optional[Iterable[EdgeId]] = None) -> List[ComponentView]:
    """Components of ``h`` (or of its sub-hypergraph on ``edge_ids``), ordered by smallest edge id."""
    ids = sorted(h.edge_ids if edge_ids is None else set(edge_ids))
    h.check_edge_ids(ids)
    graph = nx.Graph()
    graph.add_nodes_from(("e", eid) for eid in ids)
    graph.add_edges_from((("e", eid), ("v", v)) for eid in ids for v in h.edge_sets[eid])
    members = sorted(
        (sorted(key for kind, key in component if kind == "e") for component in nx.connected_components(graph)),
        key=lambda group: group[0],
    )
    views = []
    for index, group in enumerate(members):
        vertices = frozenset().union(*(h.edge_sets[eid] for eid in group))
        views.append(ComponentView(index, vertices, frozenset(group)))
    return views


def is_connected(h: Hypergraph) -> bool:
    return len(connected_components(h)) <= 1


def remove_edge(h: Hypergraph, e: EdgeId) -> Hypergraph:
    """``h`` without edge ``e``; vertices only covered by ``e`` disappear."""
    return remove_edges(h, {e})


def remove_edges(h: Hypergraph, a: Iterable[EdgeId]) -> Hypergraph:
    drop = set(a)
    h.check_edge_ids(drop)
    return h.restrict(eid for eid in h.edge_ids if eid not in drop)


@dataclass
class _Search:
    edges: List[EdgeId] = field(default_factory=list)
    seeds: Set[int] = field(default_factory=set)
    queue: Deque[int] = field(default_factory=deque)


class _Splitter:
    def __init__(self, h: Hypergraph, live: AbstractSet[EdgeId]):
        self.incidence = h.incidence
        self.edge_sets = h.edge_sets
        self.live = live
        self.uf = UnionFind()
        self.searches: Dict[int, _Search] = {}
        self.owner_vertex: Dict[int, int] = {}
        self.owner_edge: Dict[EdgeId, int] = {}
        self.active: Set[int] = set()

    def start(self, seed: int) -> None:
        if seed in self.owner_vertex:
            return
        sid = len(self.searches)
        self.uf.add(sid)
        self.searches[sid] = _Search(seeds={seed}, queue=deque([seed]))
        self.owner_vertex[seed] = sid
        self.active.add(sid)

    def merge(self, a: int, b: int) -> int:
        ra, rb = self.uf.find(a), self.uf.find(b)
        if ra == rb:
            return ra
        root = self.uf.union(ra, rb)
        other = rb if root == ra else ra
        keep, drop = self.searches[ra], self.searches[rb]
        if len(keep.edges) < len(drop.edges):
            keep, drop = drop, keep
        keep.edges.extend(drop.edges)
        keep.seeds |= drop.seeds
        keep.queue.extend(drop.queue)
        self.searches[root] = keep
        del self.searches[other]
        self.active.discard(other)
        self.active.add(root)
        return root

    def expand(self, sid: int) -> None:
        v = self.searches[sid].queue.popleft()
        for f in self.incidence.get(v, ()):
            if f not in self.live:
                continue
            owner = self.owner_edge.get(f)
            if owner is not None:
                sid = self.merge(sid, owner)
                continue
            self.owner_edge[f] = sid
            self.searches[sid].edges.append(f)
            for w in self.edge_sets[f]:
                seen = self.owner_vertex.get(w)
                if seen is None:
                    self.owner_vertex[w] = sid
                    self.searches[sid].queue.append(w)
                else:
                    sid = self.merge(sid, seen)


def split_components(h: Hypergraph, live: AbstractSet[EdgeId], seeds: Iterable[int]) -> List[ComponentPart]:
    """Components of the live edges of ``h``, each holding at least one seed vertex.

    Every component must contain a seed: the last one is reported as the
    complement of the others.  Parts are ordered by smallest edge id.
    """
    splitter = _Splitter(h, live)
    for seed in sorted(set(seeds)):
        if any(f in live for f in h.incidence.get(seed, ())):
            splitter.start(seed)
    finished: List[_Search] = []
    while len(splitter.active) > 1:
        for sid in sorted(splitter.active):
            if sid not in splitter.active:
                continue
            search = splitter.searches[sid]
            if not search.queue:
                splitter.active.discard(sid)
                finished.append(splitter.searches.pop(sid))
                continue
            splitter.expand(sid)
    parts = [ComponentPart(frozenset(s.edges), frozenset(s.seeds)) for s in finished]
    if splitter.active:
        (sid,) = splitter.active
        rest = set(live)
        for part in parts:
            rest -= part.edge_ids
        parts.append(ComponentPart(frozenset(rest), frozenset(splitter.searches[sid].seeds)))
    parts.sort(key=lambda p: p.min_edge)
    return parts
