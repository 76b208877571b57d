"""
Disjoint branches decompositions.

``compute_db`` follows the recursive construction: below the root, each
component of the remaining hypergraph is covered by the edges containing the
root's trace on it; those edges are laid out as a separator path, and every
component left after removing them is decomposed in turn, rooted at the last
path edge it touches.  The recursion runs as an explicit worklist.  Every
task only carries an edge-id set over the input hypergraph, so vertex ids
never need translating between levels.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, List, Optional

from src.config import settings
from src.exceptions import HypergraphError, InvalidDecomposition, NotDecomposable, RejectReason, Rejection
from src.hypergraph.components import connected_components, is_connected, split_components
from src.hypergraph.decomposition import Decomposition
from src.hypergraph.hypergraph import EdgeId, Hypergraph
from src.hypergraph.validators import is_valid_decomposition
from src.decomposer.separator import Separator, boundary_vertices, separator_from_parts

logger = logging.getLogger(__name__)

SeparatorStrategy = Callable[[Hypergraph, FrozenSet[EdgeId]], Separator]


@dataclass(frozen=True)
class _Task:
    edges: FrozenSet[EdgeId]
    parent: EdgeId
    trace: FrozenSet[int]
    depth: int


def compute_db(h: Hypergraph, root: EdgeId, separator: Optional[SeparatorStrategy] = None) -> Decomposition:
    """Disjoint branches decomposition of the connected hypergraph ``h`` rooted at ``root``.

    ``separator`` replaces the built-in separator computation; it receives
    the component being covered and the covering edge set.

    Raises Rejection when ``h`` is not db-rootable at ``root``.
    """
    h.edge(root)
    if h.num_edges == 1:
        return Decomposition.single(root)
    if not is_connected(h):
        raise HypergraphError("compute_db expects a connected hypergraph")

    parents: Dict[EdgeId, Optional[EdgeId]] = {root: None}
    others = frozenset(h.edge_sets) - {root}
    root_set = h.edge_sets[root]
    tasks = [
        _Task(part.edge_ids, root, root_set & part.boundary, 0)
        for part in split_components(h, others, root_set)
    ]
    tasks.reverse()
    while tasks:
        task = tasks.pop()
        try:
            subtasks = _solve(h, task, parents, separator)
        except Rejection as exc:
            logger.debug(f"root {root}: {exc.reason.value} below edge {task.parent} (depth {task.depth})")
            raise exc.nested() if task.depth > 0 else exc
        tasks.extend(reversed(subtasks))

    decomposition = Decomposition.from_parents(parents)
    if settings.VERIFY_DECOMPOSITIONS and not is_valid_decomposition(h, decomposition):
        raise InvalidDecomposition(f"compute_db produced an invalid decomposition rooted at {root}")
    return decomposition


def _solve(
    h: Hypergraph,
    task: _Task,
    parents: Dict[EdgeId, Optional[EdgeId]],
    separator: Optional[SeparatorStrategy],
) -> List[_Task]:
    incidence = h.incidence
    pivot = min(task.trace, key=lambda v: len(incidence[v]))
    cover = frozenset(
        f for f in incidence[pivot] if f in task.edges and task.trace <= h.edge_sets[f]
    )
    if not cover:
        raise Rejection(RejectReason.EMPTY_COVER, f"no edge below {task.parent} covers its trace", edge=task.parent)

    live = task.edges - cover
    parts = split_components(h, live, boundary_vertices(h, cover, live))
    if separator is None:
        order = separator_from_parts(h, cover, parts).order
    else:
        order = separator(h.restrict(task.edges), cover).order

    previous = task.parent
    for e in order:
        parents[e] = previous
        previous = e

    subtasks = []
    for part in parts:
        last = [e for e in order if h.edge_sets[e] & part.boundary][-1]
        subtasks.append(_Task(part.edge_ids, last, h.edge_sets[last] & part.boundary, task.depth + 1))
    return subtasks


def find_decomposition(h: Hypergraph) -> List[Decomposition]:
    """One decomposition per connected component, roots tried in edge-id order.

    Raises NotDecomposable naming the first component rootable at no edge.
    """
    result = []
    for component in connected_components(h):
        g = h.restrict(component.edge_ids)
        for root in sorted(component.edge_ids):
            try:
                result.append(compute_db(g, root))
                break
            except Rejection as exc:
                logger.debug(f"component {component.index}: root {root} rejected ({exc.reason.value})")
        else:
            raise NotDecomposable(component.index)
    return result


def rootable_edges(h: Hypergraph) -> List[EdgeId]:
    """Edges at which the component containing them is db-rootable."""
    found = []
    for component in connected_components(h):
        g = h.restrict(component.edge_ids)
        for root in sorted(component.edge_ids):
            try:
                compute_db(g, root)
            except Rejection:
                continue
            found.append(root)
    return sorted(found)
