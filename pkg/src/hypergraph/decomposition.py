"""
Rooted trees whose nodes are hyperedges.

A ``Decomposition`` is stored as a parent map plus ordered child tuples.
Children are ordered by the smallest edge id contained in their subtree, so
two decompositions with the same parent map compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from src.exceptions import HypergraphError
from src.hypergraph.hypergraph import EdgeId


@dataclass(frozen=True)
class Decomposition:
    root: EdgeId
    parents: Mapping[EdgeId, Optional[EdgeId]]
    children: Mapping[EdgeId, Tuple[EdgeId, ...]]

    @classmethod
    def from_parents(cls, parents: Mapping[EdgeId, Optional[EdgeId]]) -> "Decomposition":
        """Build from a node -> parent map (``None`` marks the root).

        Raises HypergraphError unless the map describes one rooted tree.
        """
        roots = [node for node, parent in parents.items() if parent is None]
        if len(roots) != 1:
            raise HypergraphError(f"expected exactly one root, found {len(roots)}")
        kids: Dict[EdgeId, List[EdgeId]] = {node: [] for node in parents}
        for node, parent in parents.items():
            if parent is None:
                continue
            if parent not in kids:
                raise HypergraphError(f"node {node} has unknown parent {parent}")
            kids[parent].append(node)
        root = roots[0]

        order = _preorder(root, kids)
        if len(order) != len(parents):
            raise HypergraphError("parent links contain a cycle or a detached node")
        smallest: Dict[EdgeId, EdgeId] = {}
        for node in reversed(order):
            smallest[node] = min([node] + [smallest[c] for c in kids[node]])
        children = {node: tuple(sorted(kids[node], key=smallest.__getitem__)) for node in parents}
        return cls(root, dict(parents), children)

    @classmethod
    def from_path(cls, order: Sequence[EdgeId]) -> "Decomposition":
        """Path-shaped tree rooted at ``order[0]``."""
        if not order:
            raise HypergraphError("empty path")
        parents: Dict[EdgeId, Optional[EdgeId]] = {order[0]: None}
        for prev, node in zip(order, order[1:]):
            if node in parents:
                raise HypergraphError(f"edge {node} repeated in path")
            parents[node] = prev
        return cls.from_parents(parents)

    @classmethod
    def single(cls, eid: EdgeId) -> "Decomposition":
        return cls(eid, {eid: None}, {eid: ()})

    @property
    def nodes(self) -> Iterable[EdgeId]:
        return self.parents.keys()

    def __len__(self) -> int:
        return len(self.parents)

    @cached_property
    def preorder(self) -> Tuple[EdgeId, ...]:
        return tuple(_preorder(self.root, self.children))

    @cached_property
    def intervals(self) -> Dict[EdgeId, Tuple[int, int]]:
        """Entry and exit times of an iterative depth-first traversal."""
        entry: Dict[EdgeId, int] = {}
        result: Dict[EdgeId, Tuple[int, int]] = {}
        clock = 0
        stack: List[Tuple[EdgeId, bool]] = [(self.root, False)]
        while stack:
            node, done = stack.pop()
            if done:
                result[node] = (entry[node], clock)
                clock += 1
                continue
            entry[node] = clock
            clock += 1
            stack.append((node, True))
            for child in reversed(self.children[node]):
                stack.append((child, False))
        return result

    def is_ancestor(self, a: EdgeId, b: EdgeId) -> bool:
        """True when ``a`` is ``b`` or an ancestor of ``b``."""
        a_in, a_out = self.intervals[a]
        b_in, b_out = self.intervals[b]
        return a_in <= b_in and b_out <= a_out


def _preorder(root: EdgeId, children: Mapping[EdgeId, Sequence[EdgeId]]) -> List[EdgeId]:
    order: List[EdgeId] = []
    seen = set()
    stack = [root]
    while stack:
        node = stack.pop()
        if node in seen:
            continue
        seen.add(node)
        order.append(node)
        stack.extend(reversed(children[node]))
    return order


def join_forest(decompositions: Sequence[Decomposition]) -> Decomposition:
    """Hang the roots of further trees under the first root.

    The trees must cover pairwise vertex-disjoint edge sets (one per connected
    component); the result is then a disjoint branches decomposition of their
    union.
    """
    if not decompositions:
        raise HypergraphError("no decompositions to join")
    parents: Dict[EdgeId, Optional[EdgeId]] = dict(decompositions[0].parents)
    head = decompositions[0].root
    for d in decompositions[1:]:
        for node, parent in d.parents.items():
            if node in parents:
                raise HypergraphError(f"edge {node} occurs in two decompositions")
            parents[node] = head if parent is None else parent
    return Decomposition.from_parents(parents)
