"""
Model counting entry points.

``count_models`` decomposes each connected component of the disjunction's
hypergraph on its own, counts the satisfying assignments of the component's
relations with the dynamic program, and multiplies the complements.
Variables declared but never constrained contribute a factor of two each.
"""

from __future__ import annotations

import logging
from typing import Callable, Optional

import numpy as np

from src.config import settings
from src.counter.dp import count_disjunctive, count_tree
from src.counter.relations import CspNegInstance
from src.counter.transform import to_disjunctive
from src.exceptions import InvalidDecomposition, NotDecomposable, Rejection, SizeGuardExceeded
from src.decomposer.compute_db import find_decomposition
from src.hypergraph.components import connected_components
from src.hypergraph.decomposition import Decomposition
from src.hypergraph.hypergraph import Hypergraph
from src.hypergraph.validators import is_valid_decomposition

logger = logging.getLogger(__name__)

Decomposer = Callable[[Hypergraph], Decomposition]


def count_models(inst: CspNegInstance, decomposer: Optional[Decomposer] = None) -> int:
    """Number of assignments of ``inst``'s variables avoiding every forbidden tuple.

    ``decomposer`` maps one connected component to a decomposition of it;
    by default the first db-rootable edge is used.  Raises NotDecomposable
    with the index of the first component that has no decomposition.
    """
    if inst.unsatisfiable:
        logger.info("instance contains an empty clause")
        return 0
    psi = to_disjunctive(inst)
    relations = psi.relation_for_edge()
    total = 1 << inst.free_variables
    for component in connected_components(psi.hypergraph):
        g = psi.hypergraph.restrict(component.edge_ids)
        try:
            d = find_decomposition(g)[0] if decomposer is None else decomposer(g)
        except (Rejection, NotDecomposable) as exc:
            raise NotDecomposable(component.index) from exc
        if decomposer is not None and not is_valid_decomposition(g, d):
            raise InvalidDecomposition(f"decomposer returned an invalid decomposition for component {component.index}")
        violating = count_tree(relations, d)
        logger.info(
            f"component {component.index}: {len(component.edge_ids)} relations, "
            f"{len(component.vertices)} variables, {violating} violating assignments"
        )
        total *= (1 << len(component.vertices)) - violating
    return total


def count_with_decomposition(inst: CspNegInstance, d: Decomposition) -> int:
    """Model count using a caller-supplied decomposition of the whole disjunction hypergraph.

    Edge ids of ``d`` refer to ``to_disjunctive(inst).hypergraph``; a forest
    over several components must be joined first (see ``join_forest``).
    """
    if inst.unsatisfiable:
        return 0
    psi = to_disjunctive(inst)
    if not psi.relations:
        return 1 << inst.num_vars
    violating = count_disjunctive(psi, d)
    return ((1 << len(psi.variables)) - violating) << inst.free_variables


def brute_force_count(inst: CspNegInstance, max_vars: Optional[int] = None) -> int:
    """Reference count by enumerating all ``2^n`` assignments.

    Assignment ``i`` gives variable ``v`` the value of bit ``v`` of ``i``.
    """
    limit = settings.BRUTE_FORCE_MAX_VARS if max_vars is None else max_vars
    n = inst.num_vars
    if n > limit:
        raise SizeGuardExceeded(f"brute force over {n} variables exceeds the limit of {limit}")
    if inst.unsatisfiable:
        return 0
    assignments = np.arange(1 << n, dtype=np.uint32 if n <= 32 else np.uint64)
    violated = np.zeros(assignments.shape, dtype=bool)
    for rel in inst.constraints:
        mask = sum(1 << var for var in rel.scope)
        masked = assignments & mask
        for row in rel.tuples:
            pattern = sum(1 << var for var, value in zip(rel.scope, row) if value)
            violated |= masked == pattern
    return int((1 << n) - np.count_nonzero(violated))
