"""
Immutable hypergraph model.

A hypergraph is a mapping from stable edge ids to non-empty frozensets of
dense integer vertex ids.  Vertex labels (for instance CNF variable numbers)
are kept alongside for display and serialization; all algorithms work on the
integer ids.

* ``from_edge_sets`` assigns vertex ids in first-occurrence order and merges
  duplicate vertex sets into one edge, concatenating their source labels.
* ``restrict`` keeps a subset of edges with their ids and vertex ids, so
  sub-hypergraphs can be compared directly with the hypergraph they came from.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

from src.exceptions import HypergraphError

EdgeId = int


@dataclass(frozen=True)
class Hypergraph:
    edge_sets: Mapping[EdgeId, FrozenSet[int]]
    sources: Mapping[EdgeId, Tuple[int, ...]] = field(default_factory=dict)
    labels: Tuple[Hashable, ...] = ()

    def __post_init__(self) -> None:
        for eid, vertices in self.edge_sets.items():
            if not vertices:
                raise HypergraphError(f"edge {eid} is empty")

    @classmethod
    def from_edge_sets(
        cls,
        edge_sets: Iterable[Iterable[Hashable]],
        sources: Optional[Sequence[int]] = None,
    ) -> "Hypergraph":
        """Build a hypergraph from vertex-label collections.

        Edge ids follow the order of first occurrence of each distinct
        vertex set.  ``sources`` gives one label per input set (defaults to
        the input position).
        """
        index: Dict[Hashable, int] = {}
        labels: List[Hashable] = []
        by_set: Dict[FrozenSet[int], EdgeId] = {}
        edges: Dict[EdgeId, FrozenSet[int]] = {}
        origin: Dict[EdgeId, List[int]] = {}
        for position, raw in enumerate(edge_sets):
            items = sorted(raw) if isinstance(raw, (set, frozenset)) else list(raw)
            if not items:
                raise HypergraphError(f"input edge {position} is empty")
            ids = []
            for label in items:
                if label not in index:
                    index[label] = len(labels)
                    labels.append(label)
                ids.append(index[label])
            vertex_set = frozenset(ids)
            source = position if sources is None else sources[position]
            eid = by_set.get(vertex_set)
            if eid is None:
                eid = len(edges)
                by_set[vertex_set] = eid
                edges[eid] = vertex_set
                origin[eid] = []
            origin[eid].append(source)
        return cls(edges, {eid: tuple(src) for eid, src in origin.items()}, tuple(labels))

    @cached_property
    def edge_ids(self) -> Tuple[EdgeId, ...]:
        return tuple(sorted(self.edge_sets))

    @cached_property
    def vertices(self) -> FrozenSet[int]:
        """Covered vertices: the union of all edges."""
        return frozenset().union(*self.edge_sets.values())

    @cached_property
    def incidence(self) -> Dict[int, Tuple[EdgeId, ...]]:
        """Vertex id to the sorted ids of the edges containing it."""
        table: Dict[int, List[EdgeId]] = {}
        for eid in self.edge_ids:
            for v in self.edge_sets[eid]:
                table.setdefault(v, []).append(eid)
        return {v: tuple(eids) for v, eids in table.items()}

    @property
    def num_edges(self) -> int:
        return len(self.edge_sets)

    def __contains__(self, eid: object) -> bool:
        return eid in self.edge_sets

    def edge(self, eid: EdgeId) -> FrozenSet[int]:
        try:
            return self.edge_sets[eid]
        except KeyError:
            raise HypergraphError(f"unknown edge id {eid}") from None

    def label(self, vertex: int) -> Hashable:
        return self.labels[vertex] if vertex < len(self.labels) else vertex

    def edge_id_for(self, vertex_set: Iterable[int]) -> Optional[EdgeId]:
        """Return the id of the edge with exactly this vertex set, if any."""
        return self._by_vertex_set.get(frozenset(vertex_set))

    @cached_property
    def _by_vertex_set(self) -> Dict[FrozenSet[int], EdgeId]:
        return {vertices: eid for eid, vertices in self.edge_sets.items()}

    def check_edge_ids(self, edge_ids: Iterable[EdgeId]) -> None:
        for eid in edge_ids:
            if eid not in self.edge_sets:
                raise HypergraphError(f"unknown edge id {eid}")

    def restrict(self, edge_ids: Iterable[EdgeId]) -> "Hypergraph":
        """Sub-hypergraph on the given edges; ids and vertex ids are kept."""
        keep = set(edge_ids)
        self.check_edge_ids(keep)
        return Hypergraph(
            {eid: self.edge_sets[eid] for eid in sorted(keep)},
            {eid: self.sources[eid] for eid in sorted(keep) if eid in self.sources},
            self.labels,
        )

    def __repr__(self) -> str:
        return f"Hypergraph(edges={self.num_edges}, vertices={len(self.vertices)})"
