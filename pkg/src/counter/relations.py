"""
Boolean relations, instances and partial assignments.

Variables are 0-based integers.  A ``Relation`` lists its tuples sorted and
without duplicates; in a ``CspNegInstance`` the tuples of each constraint
are the forbidden ones, in a ``DisjunctiveInstance`` they are the satisfying
ones of a disjunct.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import AbstractSet, Dict, FrozenSet, Iterator, Mapping, Tuple

from src.hypergraph.hypergraph import Hypergraph

BoolTuple = Tuple[int, ...]


@dataclass(frozen=True)
class Relation:
    scope: Tuple[int, ...]
    tuples: Tuple[BoolTuple, ...] = ()

    def __post_init__(self) -> None:
        if not self.scope:
            raise ValueError("relation scope is empty")
        if len(set(self.scope)) != len(self.scope):
            raise ValueError(f"repeated variable in scope {self.scope}")
        for row in self.tuples:
            if len(row) != len(self.scope):
                raise ValueError(f"tuple {row} does not match scope arity {len(self.scope)}")
            if any(value not in (0, 1) for value in row):
                raise ValueError(f"tuple {row} is not Boolean")
        object.__setattr__(self, "scope", tuple(self.scope))
        object.__setattr__(self, "tuples", tuple(sorted(set(map(tuple, self.tuples)))))

    @property
    def variables(self) -> FrozenSet[int]:
        return frozenset(self.scope)

    def __len__(self) -> int:
        return len(self.tuples)

    def aligned(self) -> "Relation":
        """The same relation with its scope in increasing variable order."""
        order = sorted(range(len(self.scope)), key=self.scope.__getitem__)
        return Relation(
            tuple(self.scope[i] for i in order),
            tuple(tuple(row[i] for i in order) for row in self.tuples),
        )

    def assignments(self) -> Iterator["PartialAssignment"]:
        for row in self.tuples:
            yield PartialAssignment(tuple(sorted(zip(self.scope, row))))


@dataclass(frozen=True)
class PartialAssignment:
    """Sparse variable -> value map stored as sorted ``(variable, value)`` pairs."""
    items: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def of(cls, mapping: Mapping[int, int]) -> "PartialAssignment":
        return cls(tuple(sorted(mapping.items())))

    @property
    def domain(self) -> FrozenSet[int]:
        return frozenset(var for var, _ in self.items)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.items)

    def __len__(self) -> int:
        return len(self.items)

    def restrict(self, variables: AbstractSet[int]) -> "PartialAssignment":
        return PartialAssignment(tuple(p for p in self.items if p[0] in variables))

    def consistent_with(self, other: "PartialAssignment") -> bool:
        mine = self.as_dict()
        return all(mine.get(var, value) == value for var, value in other.items)

    def union(self, other: "PartialAssignment") -> "PartialAssignment":
        """Disjoint union of two assignments with disjoint domains."""
        if self.domain & other.domain:
            raise ValueError("assignments overlap")
        return PartialAssignment(tuple(sorted(self.items + other.items)))


EMPTY = PartialAssignment()


@dataclass(frozen=True)
class CspNegInstance:
    """Conjunction of constraints, each given by its forbidden tuples."""
    num_vars: int
    constraints: Tuple[Relation, ...] = ()
    unsatisfiable: bool = False

    def __post_init__(self) -> None:
        for rel in self.constraints:
            if any(not 0 <= var < self.num_vars for var in rel.scope):
                raise ValueError(f"scope {rel.scope} references a variable outside 0..{self.num_vars - 1}")

    @cached_property
    def used_variables(self) -> FrozenSet[int]:
        return frozenset(var for rel in self.constraints for var in rel.scope)

    @property
    def free_variables(self) -> int:
        """Declared variables that occur in no constraint."""
        return self.num_vars - len(self.used_variables)

    def hypergraph(self) -> Hypergraph:
        return Hypergraph.from_edge_sets([sorted(rel.scope) for rel in self.constraints])


@dataclass(frozen=True)
class DisjunctiveInstance:
    """Disjunction of relations with pairwise distinct scope sets."""
    variables: FrozenSet[int]
    relations: Tuple[Relation, ...] = ()
    hypergraph: Hypergraph = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        seen = set()
        for rel in self.relations:
            key = rel.variables
            if key in seen:
                raise ValueError(f"two relations share the scope {sorted(key)}")
            seen.add(key)
        covered = frozenset().union(*(rel.variables for rel in self.relations))
        if covered != self.variables:
            raise ValueError("every variable must occur in some relation scope")
        # edge ids coincide with relation positions because scopes are distinct
        object.__setattr__(self, "hypergraph", Hypergraph.from_edge_sets([rel.scope for rel in self.relations]))

    def relation_for_edge(self) -> Dict[int, Relation]:
        return dict(enumerate(self.relations))

