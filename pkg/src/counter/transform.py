"""
From CNF to negative representation, and from there to a disjunction.

A clause forbids exactly one assignment of its variables (its countermodel),
so a CNF formula is a constraint problem in negative representation.  An
assignment violates that problem iff it satisfies the disjunction of the
forbidden-tuple relations, hence ``#models = 2^|X| - #disjunction``.
"""

from __future__ import annotations

import logging
from typing import Dict, FrozenSet, List, Sequence

from src.counter.relations import CspNegInstance, DisjunctiveInstance, Relation

logger = logging.getLogger(__name__)


def cnf_to_cspneg(clauses: Sequence[Sequence[int]], n: int) -> CspNegInstance:
    """Translate DIMACS-style clauses over variables ``1..n``.

    Duplicate literals are dropped, a clause with complementary literals
    becomes a constraint without forbidden tuples and an empty clause marks
    the instance unsatisfiable.
    """
    constraints: List[Relation] = []
    unsatisfiable = False
    for index, clause in enumerate(clauses):
        literals = set()
        for lit in clause:
            if not isinstance(lit, int) or lit == 0 or abs(lit) > n:
                raise ValueError(f"clause {index}: malformed literal {lit!r} for {n} variables")
            literals.add(lit)
        if not literals:
            unsatisfiable = True
            continue
        scope = tuple(sorted({abs(lit) - 1 for lit in literals}))
        if any(-lit in literals for lit in literals):
            constraints.append(Relation(scope, ()))
            continue
        sign = {abs(lit) - 1: lit > 0 for lit in literals}
        constraints.append(Relation(scope, (tuple(0 if sign[var] else 1 for var in scope),)))
    return CspNegInstance(n, tuple(constraints), unsatisfiable)


def to_disjunctive(inst: CspNegInstance) -> DisjunctiveInstance:
    """Disjunction of the forbidden-tuple relations, one per distinct scope set."""
    merged: Dict[FrozenSet[int], Relation] = {}
    for constraint in inst.constraints:
        rel = constraint.aligned()
        key = rel.variables
        if key in merged:
            merged[key] = Relation(rel.scope, merged[key].tuples + rel.tuples)
        else:
            merged[key] = rel
    relations = tuple(merged.values())
    if len(relations) < len(inst.constraints):
        logger.info(f"merged {len(inst.constraints)} constraints into {len(relations)} relations")
    return DisjunctiveInstance(inst.used_variables, relations)


def cspneg_to_cnf(inst: CspNegInstance) -> List[List[int]]:
    """One clause per forbidden tuple, the inverse of ``cnf_to_cspneg``.

    A constraint without forbidden tuples becomes a tautological clause on
    its scope so that the instance keeps its hypergraph.  An unsatisfiable
    instance gets an empty clause.
    """
    clauses: List[List[int]] = []
    for rel in inst.constraints:
        if not rel.tuples:
            first = rel.scope[0] + 1
            clauses.append([first, -first] + [var + 1 for var in rel.scope[1:]])
            continue
        for row in rel.tuples:
            clauses.append([var + 1 if value == 0 else -(var + 1) for var, value in zip(rel.scope, row)])
    if inst.unsatisfiable:
        clauses.append([])
    return clauses
