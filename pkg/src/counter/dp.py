"""
Counting satisfying assignments of a disjunction over a disjoint branches
decomposition.

For a node ``t`` with relation ``R_t`` and children ``t1..tk`` let ``V_t`` be
the variables of the subtree and ``S_t(c)`` the number of assignments of
``V_t`` consistent with ``c`` that satisfy some relation of the subtree.
Then

    S_t(c) = s_relation(R_t, V_t, c)
             + combine(children, V_t, c)
             - sum over a in R_t consistent with c of combine(children, V_t, a)

where ``combine`` fuses the children's counts, whose variable sets are
pairwise disjoint.  Child lookups only depend on the restriction of the
conditioning assignment to the child's own scope, so every node keeps one
table entry per distinct restriction it is asked for.
"""

from __future__ import annotations

import logging
from typing import AbstractSet, Callable, Dict, List, Mapping, Sequence, Set, Tuple

from src.counter.relations import EMPTY, DisjunctiveInstance, PartialAssignment, Relation
from src.exceptions import InvalidDecomposition
from src.hypergraph.decomposition import Decomposition
from src.hypergraph.hypergraph import EdgeId
from src.hypergraph.validators import is_disjoint_branches, is_join_tree

logger = logging.getLogger(__name__)

SubcountProvider = Callable[[PartialAssignment], int]


def s_relation(r: Relation, x: AbstractSet[int], a: PartialAssignment) -> int:
    """Assignments of ``x`` consistent with ``a`` that extend a tuple of ``r``."""
    scope = r.variables
    domain = a.domain
    if not scope <= x or not domain <= x:
        raise ValueError("relation scope and assignment domain must lie inside x")
    fixed = a.as_dict()
    consistent = sum(
        1 for row in r.tuples if all(fixed.get(var, value) == value for var, value in zip(r.scope, row))
    )
    return consistent << len(x - (scope | domain))


def fuse(parts: Sequence[Tuple[int, int]]) -> int:
    """Satisfying assignments of a disjunction of independent parts.

    ``parts`` lists ``(n_i, S_i)``: part ``i`` has ``n_i`` unassigned
    variables of which ``S_i`` assignments satisfy it.  The result is
    ``sum_i S_i * prod_{j<i} (2^n_j - S_j) * prod_{j>i} 2^n_j``.
    """
    after = [0] * len(parts)
    running = 0
    for i in range(len(parts) - 1, -1, -1):
        after[i] = running
        running += parts[i][0]
    total = 0
    before = 1
    for i, (n_i, s_i) in enumerate(parts):
        total += (s_i * before) << after[i]
        before *= (1 << n_i) - s_i
    return total


def combine_disjoint(
    parts: Sequence[Tuple[AbstractSet[int], SubcountProvider]],
    x: AbstractSet[int],
    a: PartialAssignment,
) -> int:
    """Assignments of ``x`` consistent with ``a`` satisfying some part.

    Each provider receives ``a`` restricted to its variable set and returns
    the count for that part over its own variables.
    """
    domain = a.domain
    seen: Set[int] = set()
    sized: List[Tuple[int, int]] = []
    for variables, provider in parts:
        if seen & variables:
            raise ValueError("part variable sets overlap")
        seen |= variables
        sized.append((len(variables - domain), provider(a.restrict(variables))))
    if not seen <= x:
        raise ValueError("part variables must lie inside x")
    return fuse(sized) << len(x - (domain | seen))


def count_disjunctive(psi: DisjunctiveInstance, d: Decomposition) -> int:
    """Satisfying assignments of ``psi`` over its variables.

    Raises InvalidDecomposition unless ``d`` is a disjoint branches
    decomposition of ``psi``'s hypergraph.
    """
    h = psi.hypergraph
    if not is_join_tree(h, d) or not is_disjoint_branches(h, d):
        raise InvalidDecomposition("decomposition is not a disjoint branches decomposition of the instance")
    return count_tree(psi.relation_for_edge(), d)


def count_tree(relations: Mapping[EdgeId, Relation], d: Decomposition) -> int:
    """The dynamic program on a decomposition already known to be valid."""
    order = d.preorder
    scope = {t: relations[t].variables for t in order}
    rows = {t: list(relations[t].assignments()) for t in order}

    needed: Dict[EdgeId, Set[PartialAssignment]] = {d.root: {EMPTY}}
    for t in order:
        for child in d.children[t]:
            keys = {key.restrict(scope[child]) for key in needed[t]}
            keys.update(row.restrict(scope[child]) for row in rows[t])
            needed[child] = keys

    size: Dict[EdgeId, int] = {}
    values: Dict[EdgeId, Dict[PartialAssignment, int]] = {}
    for t in reversed(order):
        kids = d.children[t]
        size[t] = len(scope[t]) + sum(size[c] - len(scope[t] & scope[c]) for c in kids)

        def fused(a: PartialAssignment) -> int:
            domain = a.domain
            parts = []
            used = len(domain)
            for c in kids:
                free = size[c] - len(domain & scope[c])
                parts.append((free, values[c][a.restrict(scope[c])]))
                used += free
            return fuse(parts) << (size[t] - used)

        own_free = size[t] - len(scope[t])
        row_fusion: Dict[PartialAssignment, int] = {}
        table: Dict[PartialAssignment, int] = {}
        for key in needed[t]:
            matching = [row for row in rows[t] if row.consistent_with(key)]
            value = len(matching) << own_free
            if kids:
                value += fused(key)
                for row in matching:
                    if row not in row_fusion:
                        row_fusion[row] = fused(row)
                    value -= row_fusion[row]
            table[key] = value
        values[t] = table
        for c in kids:
            del values[c]
    logger.debug(f"counted over {len(order)} nodes")
    return values[d.root][EMPTY]
