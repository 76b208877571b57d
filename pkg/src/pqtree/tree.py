"""
Immutable PQF-trees.

Leaves carry edge ids.  Internal nodes are

* P: children may be permuted freely,
* Q: children are read in order or in reverse,
* F: children are read in order only.

Every constructor goes through :func:`make`, which keeps the tree in normal
form: no internal node with a single child, Q-nodes with two children become
P-nodes and F-nodes absorb F-node children.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import permutations, product
from typing import FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from src.config import settings
from src.exceptions import SizeGuardExceeded
from src.hypergraph.hypergraph import EdgeId

Frontier = Tuple[EdgeId, ...]


class NodeKind(str, Enum):
    LEAF = "L"
    P = "P"
    Q = "Q"
    F = "F"


@dataclass(frozen=True)
class PQFTree:
    kind: NodeKind
    children: Tuple["PQFTree", ...] = ()
    edge: Optional[EdgeId] = None

    @staticmethod
    def leaf(edge: EdgeId) -> "PQFTree":
        return PQFTree(NodeKind.LEAF, (), edge)

    @property
    def is_leaf(self) -> bool:
        return self.kind is NodeKind.LEAF

    @cached_property
    def leaves(self) -> FrozenSet[EdgeId]:
        if self.is_leaf:
            return frozenset((self.edge,))
        return frozenset().union(*(c.leaves for c in self.children))

    @cached_property
    def min_leaf(self) -> EdgeId:
        return min(self.leaves)

    def frontier(self) -> Frontier:
        """The leftmost reading: every node's children in stored order."""
        out: List[EdgeId] = []
        stack: List[PQFTree] = [self]
        while stack:
            node = stack.pop()
            if node.is_leaf:
                out.append(node.edge)
            else:
                stack.extend(reversed(node.children))
        return tuple(out)

    def node_at(self, path: Sequence[int]) -> "PQFTree":
        node = self
        for index in path:
            node = node.children[index]
        return node

    def replace_at(self, path: Sequence[int], new: "PQFTree") -> "PQFTree":
        """Return the tree with the node at ``path`` replaced, renormalizing upwards."""
        spine = [self]
        for index in path:
            spine.append(spine[-1].children[index])
        result = new
        for depth in range(len(path) - 1, -1, -1):
            parent = spine[depth]
            kids = list(parent.children)
            kids[path[depth]] = result
            result = make(parent.kind, kids)
        return result

    def internal_nodes(self) -> Iterable["PQFTree"]:
        stack: List[PQFTree] = [self]
        while stack:
            node = stack.pop()
            if not node.is_leaf:
                yield node
                stack.extend(node.children)

    def has_f_nodes(self) -> bool:
        return any(node.kind is NodeKind.F for node in self.internal_nodes())

    def is_normal(self) -> bool:
        """Arity invariants and normal form, checked on every internal node."""
        for node in self.internal_nodes():
            k = len(node.children)
            if k < 2 or (node.kind is NodeKind.Q and k < 3):
                return False
            if node.kind is NodeKind.F and any(c.kind is NodeKind.F for c in node.children):
                return False
        return True

    def count_frontiers(self) -> int:
        if self.is_leaf:
            return 1
        total = math.prod(c.count_frontiers() for c in self.children)
        if self.kind is NodeKind.P:
            return total * math.factorial(len(self.children))
        if self.kind is NodeKind.Q:
            return total * 2
        return total

    def to_text(self) -> str:
        if self.is_leaf:
            return str(self.edge)
        return f"({self.kind.value} " + " ".join(c.to_text() for c in self.children) + ")"

    @staticmethod
    def from_text(text: str) -> "PQFTree":
        """Parse the nested ``(P 0 (Q 1 2 3))`` notation."""
        tokens = re.findall(r"\(|\)|[^\s()]+", text)
        stack: List[Tuple[NodeKind, List[PQFTree]]] = []
        root: Optional[PQFTree] = None
        i = 0
        while i < len(tokens):
            token = tokens[i]
            if token == "(":
                stack.append((NodeKind(tokens[i + 1]), []))
                i += 2
                continue
            if token == ")":
                kind, kids = stack.pop()
                node = make(kind, kids)
            else:
                node = PQFTree.leaf(int(token))
            if stack:
                stack[-1][1].append(node)
            else:
                root = node
            i += 1
        if root is None or stack:
            raise ValueError(f"malformed tree text: {text!r}")
        return root

    def __str__(self) -> str:
        return self.to_text()


def make(kind: NodeKind, children: Sequence[PQFTree]) -> PQFTree:
    """Build an internal node in normal form."""
    kids: List[PQFTree] = []
    for child in children:
        if kind is NodeKind.F and child.kind is NodeKind.F:
            kids.extend(child.children)
        else:
            kids.append(child)
    if not kids:
        raise ValueError("internal node without children")
    if len(kids) == 1:
        return kids[0]
    if kind is NodeKind.Q and len(kids) == 2:
        kind = NodeKind.P
    return PQFTree(kind, tuple(kids))


def enumerate_frontiers(t: PQFTree, limit: Optional[int] = None) -> Set[Frontier]:
    """All frontiers of ``t``; guarded by ``FRONTIER_ENUM_LIMIT``."""
    cap = settings.FRONTIER_ENUM_LIMIT if limit is None else limit
    size = t.count_frontiers()
    if size > cap:
        raise SizeGuardExceeded(f"tree has {size} frontiers, limit is {cap}")
    return _frontiers(t)


def _frontiers(t: PQFTree) -> Set[Frontier]:
    if t.is_leaf:
        return {(t.edge,)}
    parts = [_frontiers(c) for c in t.children]
    if t.kind is NodeKind.F:
        orders = [parts]
    elif t.kind is NodeKind.Q:
        orders = [parts, parts[::-1]]
    else:
        orders = [list(p) for p in permutations(parts)]
    result: Set[Frontier] = set()
    for order in orders:
        for pieces in product(*order):
            result.add(tuple(e for piece in pieces for e in piece))
    return result
