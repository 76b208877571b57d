"""
PQ-tree construction for the consecutive arrangements of an edge set.

For a set ``a`` of edges of ``h`` the admissible orders are the join paths
of the sub-hypergraph ``(∪a, a)``: for every vertex ``v`` the edges of ``a``
containing ``v`` must be consecutive.  The tree is built from the overlap
components of these constraint sets:

* two sets overlap when they intersect and neither contains the other;
* every overlap component with at least two sets has, up to reversal, one
  arrangement of its atoms (elements grouped by membership), which becomes
  a Q-node over its union;
* the unions of the components, the remaining single sets and the ground
  set form a laminar family; each member becomes a node under the smallest
  member strictly containing it, and members without a Q arrangement are
  P-nodes.

No F-nodes are produced.  P children are sorted by smallest leaf and Q-nodes
are oriented so that the first child has the smaller smallest leaf.
"""

from __future__ import annotations

import logging
from collections import deque
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Union

from src.exceptions import HypergraphError, RejectReason, Rejection
from src.hypergraph.hypergraph import EdgeId, Hypergraph
from src.hypergraph.union_find import UnionFind
from src.pqtree.tree import NodeKind, PQFTree, make

logger = logging.getLogger(__name__)

Block = FrozenSet[EdgeId]


def build_pq_tree(h: Hypergraph, a: Iterable[EdgeId]) -> PQFTree:
    """Tree whose frontiers are exactly the join paths of ``(∪a, a)``.

    Raises Rejection(NO_JOIN_PATH) when there is none.
    """
    ground = frozenset(a)
    if not ground:
        raise HypergraphError("cannot build a PQ-tree over an empty edge set")
    h.check_edge_ids(ground)
    if len(ground) == 1:
        return PQFTree.leaf(next(iter(ground)))

    constraints = _constraint_sets(h, ground)
    components = _overlap_components(constraints)

    arranged: Dict[FrozenSet[EdgeId], List[Block]] = {}
    plain: Set[FrozenSet[EdgeId]] = set()
    for component in components:
        if len(component) == 1:
            plain.add(component[0])
            continue
        blocks = _arrange(component)
        if blocks is None:
            raise Rejection(RejectReason.NO_JOIN_PATH, f"edges {sorted(ground)} admit no join path")
        arranged[frozenset().union(*component)] = blocks
    plain.add(ground)
    members = set(arranged) | plain
    return _assemble(ground, members, arranged)


def _constraint_sets(h: Hypergraph, ground: FrozenSet[EdgeId]) -> List[FrozenSet[EdgeId]]:
    holders: Dict[int, Set[EdgeId]] = {}
    for eid in ground:
        for v in h.edge_sets[eid]:
            holders.setdefault(v, set()).add(eid)
    distinct = {frozenset(s) for s in holders.values() if 1 < len(s) < len(ground)}
    return sorted(distinct, key=lambda s: (len(s), sorted(s)))


def _overlaps(x: FrozenSet[EdgeId], y: FrozenSet[EdgeId]) -> bool:
    return bool(x & y) and not x <= y and not y <= x


def _overlap_components(sets: Sequence[FrozenSet[EdgeId]]) -> List[List[FrozenSet[EdgeId]]]:
    """Group the sets by overlap; each group is listed in breadth-first overlap order."""
    by_element: Dict[EdgeId, List[int]] = {}
    for index, s in enumerate(sets):
        for e in s:
            by_element.setdefault(e, []).append(index)
    neighbours: Dict[int, Set[int]] = {i: set() for i in range(len(sets))}
    uf = UnionFind(range(len(sets)))
    for indices in by_element.values():
        for pos, i in enumerate(indices):
            for j in indices[pos + 1:]:
                if j not in neighbours[i] and _overlaps(sets[i], sets[j]):
                    neighbours[i].add(j)
                    neighbours[j].add(i)
                    uf.union(i, j)

    groups: Dict[int, List[int]] = {}
    for i in range(len(sets)):
        groups.setdefault(uf.find(i), []).append(i)
    result = []
    for members in sorted(groups.values()):
        start = members[0]
        order, seen, queue = [], {start}, deque([start])
        while queue:
            i = queue.popleft()
            order.append(sets[i])
            for j in sorted(neighbours[i]):
                if j not in seen:
                    seen.add(j)
                    queue.append(j)
        result.append(order)
    return result


def _arrange(component: Sequence[FrozenSet[EdgeId]]) -> Optional[List[Block]]:
    """Ordered atoms of an overlap component, or None if no arrangement exists.

    Each set after the first overlaps an earlier one, so it either extends
    the arrangement at one end or refines the blocks it covers.
    """
    blocks: List[Block] = [component[0]]
    placed: Set[EdgeId] = set(component[0])
    for x in component[1:]:
        hits = [i for i, block in enumerate(blocks) if block & x]
        lo, hi = hits[0], hits[-1]
        if hits != list(range(lo, hi + 1)):
            return None
        if any(not blocks[i] <= x for i in range(lo + 1, hi)):
            return None
        fresh = x - placed
        last = len(blocks) - 1
        if fresh:
            if hi == last and (lo == hi or blocks[hi] <= x):
                blocks = blocks[:lo] + _split(blocks[lo], x, inner_last=True) + blocks[lo + 1:]
                blocks.append(frozenset(fresh))
            elif lo == 0 and (lo == hi or blocks[0] <= x):
                blocks = blocks[:hi] + _split(blocks[hi], x, inner_last=False) + blocks[hi + 1:]
                blocks.insert(0, frozenset(fresh))
            else:
                return None
            placed |= fresh
        else:
            if lo == hi:
                return None
            tail = _split(blocks[hi], x, inner_last=False)
            head = _split(blocks[lo], x, inner_last=True)
            blocks = blocks[:lo] + head + blocks[lo + 1:hi] + tail + blocks[hi + 1:]
    return blocks


def _split(block: Block, x: FrozenSet[EdgeId], inner_last: bool) -> List[Block]:
    inside, outside = block & x, block - x
    if not outside:
        return [block]
    return [outside, inside] if inner_last else [inside, outside]


def _assemble(
    ground: FrozenSet[EdgeId],
    members: Set[FrozenSet[EdgeId]],
    arranged: Dict[FrozenSet[EdgeId], List[Block]],
) -> PQFTree:
    ordered = sorted(members, key=lambda m: (len(m), sorted(m)))
    chains: Dict[EdgeId, List[FrozenSet[EdgeId]]] = {}
    for member in ordered:
        for e in member:
            chains.setdefault(e, []).append(member)

    items: Dict[FrozenSet[EdgeId], List[Union[FrozenSet[EdgeId], EdgeId]]] = {m: [] for m in ordered}
    covered: Dict[FrozenSet[EdgeId], Set[EdgeId]] = {m: set() for m in ordered}
    for member in ordered:
        chain = chains[min(member)]
        position = chain.index(member)
        if position + 1 < len(chain):
            parent = chain[position + 1]
            items[parent].append(member)
            covered[parent] |= member

    built: Dict[FrozenSet[EdgeId], PQFTree] = {}
    for member in ordered:
        parts: List[PQFTree] = [built[m] for m in items[member] if isinstance(m, frozenset)]
        parts += [PQFTree.leaf(e) for e in sorted(member - covered[member])]
        if member in arranged:
            built[member] = _q_node(arranged[member], parts)
        else:
            built[member] = make(NodeKind.P, sorted(parts, key=lambda t: t.min_leaf))
    return built[ground]


def _q_node(blocks: List[Block], parts: List[PQFTree]) -> PQFTree:
    atom_of: Dict[EdgeId, int] = {e: i for i, block in enumerate(blocks) for e in block}
    grouped: List[List[PQFTree]] = [[] for _ in blocks]
    for part in parts:
        grouped[atom_of[part.min_leaf]].append(part)
    children = [make(NodeKind.P, sorted(group, key=lambda t: t.min_leaf)) for group in grouped]
    if children[0].min_leaf > children[-1].min_leaf:
        children.reverse()
    return make(NodeKind.Q, children)
