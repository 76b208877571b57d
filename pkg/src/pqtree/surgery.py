"""
PQF-subtrees and the surgery used to build separators.

* :func:`locate_subtree` finds the PQF-subtree whose leaves are exactly the
  edges containing a vertex set.
* :func:`force` restricts a tree to the frontiers that end with a frontier
  of a given PQF-subtree.
* :func:`restrict_inclusion_order` restricts a tree to the frontiers along
  which the traces on a vertex set grow by inclusion.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Tuple

from src.exceptions import HypergraphError, RejectReason, Rejection
from src.hypergraph.hypergraph import EdgeId, Hypergraph
from src.pqtree.tree import NodeKind, PQFTree, make

logger = logging.getLogger(__name__)

Span = Tuple[int, int]


@dataclass(frozen=True)
class PQFSubtreeRef:
    """A node reached by ``path`` from the root, optionally cut to children ``span``.

    ``span`` is only set on Q- and F-nodes and never covers all children;
    ``None`` denotes the whole node.
    """
    path: Tuple[int, ...] = ()
    span: Optional[Span] = None

    def node(self, t: PQFTree) -> PQFTree:
        return t.node_at(self.path)

    def children(self, t: PQFTree) -> Tuple[PQFTree, ...]:
        node = self.node(t)
        if self.span is None:
            return node.children
        lo, hi = self.span
        return node.children[lo:hi + 1]

    def leaves(self, t: PQFTree) -> FrozenSet[EdgeId]:
        if self.span is None:
            return self.node(t).leaves
        return frozenset().union(*(c.leaves for c in self.children(t)))

    def as_tree(self, t: PQFTree) -> PQFTree:
        """The subtree as a standalone tree (a Q range of two children reads as a P-node)."""
        if self.span is None:
            return self.node(t)
        return make(self.node(t).kind, self.children(t))


def _ref(path: List[int], node: PQFTree, lo: int, hi: int) -> PQFSubtreeRef:
    if lo == 0 and hi == len(node.children) - 1:
        return PQFSubtreeRef(tuple(path))
    return PQFSubtreeRef(tuple(path), (lo, hi))


def locate_subtree(
    t: PQFTree,
    h: Hypergraph,
    vset: Iterable[int],
    within: Optional[PQFSubtreeRef] = None,
) -> PQFSubtreeRef:
    """PQF-subtree whose leaves are exactly the edges of ``t`` containing ``vset``.

    ``t`` must be consistent: for each vertex the edges containing it are
    consecutive in every frontier.  With ``within`` the search starts from
    that subtree and only its leaves are considered.
    """
    vertices = sorted(set(vset))
    ref = within if within is not None else PQFSubtreeRef()
    pool = ref.leaves(t)
    target = frozenset(e for e in pool if h.edge(e).issuperset(vertices))
    if not target:
        raise HypergraphError(f"no edge of the tree contains vertices {vertices}")
    for v in vertices:
        wanted = frozenset(e for e in ref.leaves(t) if v in h.edge_sets[e])
        ref = _narrow(t, ref, wanted)
    if ref.leaves(t) != target:
        raise HypergraphError("tree is not consistent for the located vertex set")
    return ref


def _narrow(t: PQFTree, ref: PQFSubtreeRef, wanted: FrozenSet[EdgeId]) -> PQFSubtreeRef:
    if ref.leaves(t) == wanted:
        return ref
    path = list(ref.path)
    node = ref.node(t)
    lo, hi = ref.span if ref.span is not None else (0, len(node.children) - 1)
    while True:
        hits = [i for i in range(lo, hi + 1) if node.children[i].leaves & wanted]
        if len(hits) == 1:
            path.append(hits[0])
            node = node.children[hits[0]]
            if node.leaves == wanted:
                return PQFSubtreeRef(tuple(path))
            lo, hi = 0, len(node.children) - 1
            continue
        i, j = hits[0], hits[-1]
        if node.kind is NodeKind.P:
            if node.leaves != wanted:
                raise HypergraphError("edges containing a vertex split a P-node")
            return PQFSubtreeRef(tuple(path))
        found = _ref(path, node, i, j)
        if found.leaves(t) != wanted:
            raise HypergraphError("edges containing a vertex are not a child range")
        return found


def force(t: PQFTree, s: PQFSubtreeRef) -> PQFTree:
    """Keep the frontiers of ``t`` whose suffix is a frontier of ``s``.

    Raises Rejection(EMPTY_RESTRICTION) when no frontier is left.
    """
    return force_within(t, PQFSubtreeRef(), s)


def force_within(t: PQFTree, scope: PQFSubtreeRef, target: PQFSubtreeRef) -> PQFTree:
    """Like :func:`force`, with ``target`` forced to the right end of ``scope``.

    ``scope`` must contain ``target``.  Frontiers of ``t`` are kept when the
    part read from ``scope`` ends with a frontier of ``target``.
    """
    depth = len(scope.path)
    if target.path[:depth] != scope.path:
        raise HypergraphError("target subtree lies outside the scope")
    node = scope.node(t)
    bounds = scope.span if scope.span is not None else (0, len(node.children) - 1)
    rebuilt = _force_at(node, target.path[depth:], target.span, bounds)
    if rebuilt is node:
        return t
    return t.replace_at(scope.path, rebuilt)


def _force_at(node: PQFTree, path: Tuple[int, ...], span: Optional[Span], bounds: Span) -> PQFTree:
    if node.is_leaf:
        return node
    k = len(node.children)
    if not path:
        lo, hi = span if span is not None else (0, k - 1)
        if (lo, hi) == bounds:
            return node
        return _orient(node, lo, hi, bounds, list(node.children))
    c = path[0]
    child = node.children[c]
    forced = _force_at(child, path[1:], span, (0, len(child.children) - 1))
    if node.kind is NodeKind.P:
        others = [x for i, x in enumerate(node.children) if i != c]
        return make(NodeKind.F, [make(NodeKind.P, others), forced])
    kids = list(node.children)
    kids[c] = forced
    return _orient(node, c, c, bounds, kids)


def _orient(node: PQFTree, lo: int, hi: int, bounds: Span, kids: List[PQFTree]) -> PQFTree:
    if hi == bounds[1]:
        return make(NodeKind.F, kids)
    if node.kind is NodeKind.Q and lo == bounds[0]:
        return make(NodeKind.F, kids[::-1])
    raise Rejection(RejectReason.EMPTY_RESTRICTION, f"cannot move children {lo}..{hi} of a {node.kind.value}-node to the right end")


def restrict_inclusion_order(t: PQFTree, h: Hypergraph, vset: Iterable[int]) -> PQFTree:
    """Keep the frontiers along which the traces ``e ∩ vset`` never shrink.

    The non-empty traces must form an inclusion chain; edges not meeting
    ``vset`` are unconstrained.
    """
    vertices = frozenset(vset)
    traces = {h.edge(e) & vertices for e in t.leaves}
    traces.discard(frozenset())
    if len(traces) <= 1:
        return t
    chain = sorted(traces, key=len)
    for smaller, larger in zip(chain, chain[1:]):
        if not smaller <= larger:
            raise HypergraphError("traces on the vertex set are not an inclusion chain")
    scope = locate_subtree(t, h, chain[0])
    target = locate_subtree(t, h, chain[-1], within=scope)
    logger.debug(f"forcing {sorted(target.leaves(t))} to the end of {sorted(scope.leaves(t))}")
    return force_within(t, scope, target)
