"""
Seeded instance and hypergraph generators.

``gen_db_instance`` grows a random tree of scopes top-down: every child
takes a non-empty subset of its parent's variables, disjoint from the
subsets given to its siblings, plus fresh variables nobody else has seen.
A variable therefore only travels down a single branch, so the tree is a
disjoint branches decomposition of the instance it generates.
"""

from __future__ import annotations

import logging
import random
from collections import deque
from itertools import combinations, permutations, product
from typing import Deque, Dict, FrozenSet, Iterable, Iterator, List, Optional, Set, Tuple

from pydantic import BaseModel, Field, model_validator

from src.counter.relations import CspNegInstance, Relation
from src.counter.transform import cnf_to_cspneg, to_disjunctive
from src.exceptions import InvalidDecomposition
from src.hypergraph.decomposition import Decomposition
from src.hypergraph.hypergraph import Hypergraph
from src.hypergraph.validators import is_valid_decomposition
from src.pqtree.tree import NodeKind, PQFTree, make

logger = logging.getLogger(__name__)


class GeneratorConfig(BaseModel):
    seed: int = Field(default=0, ge=0, lt=2**64)
    edges: int = Field(default=8, ge=1)
    max_edge_size: int = Field(default=3, ge=1)
    branching: int = Field(default=2, ge=1)
    min_tuples: int = Field(default=0, ge=0)
    max_tuples: int = Field(default=3, ge=0)
    min_fresh: int = Field(default=0, ge=0)
    max_fresh: int = Field(default=2, ge=0)
    max_vars: Optional[int] = Field(default=None, ge=1)

    @model_validator(mode="after")
    def _check_ranges(self) -> "GeneratorConfig":
        if self.max_tuples < self.min_tuples:
            raise ValueError("max_tuples must be at least min_tuples")
        if self.max_fresh < self.min_fresh:
            raise ValueError("max_fresh must be at least min_fresh")
        return self


def gen_db_instance(cfg: GeneratorConfig) -> Tuple[CspNegInstance, Decomposition]:
    """Random instance together with a witness decomposition.

    Edge ids of the witness refer to ``to_disjunctive(inst).hypergraph``;
    constraints are emitted in node order with pairwise distinct scopes,
    so node ``i`` of the tree is edge ``i``.  Fewer than ``cfg.edges``
    constraints are produced when ``cfg.max_vars`` runs out or a child
    would repeat the scope of one of its ancestors.
    """
    rng = random.Random(cfg.seed)
    budget = cfg.max_vars
    next_var = 0

    def fresh(count: int) -> List[int]:
        nonlocal next_var
        if budget is not None:
            count = min(count, budget - next_var)
        block = list(range(next_var, next_var + count))
        next_var += count
        return block

    root_scope = fresh(rng.randint(1, cfg.max_edge_size))
    scopes: List[FrozenSet[int]] = [frozenset(root_scope)]
    parents: Dict[int, Optional[int]] = {0: None}
    seen: Set[FrozenSet[int]] = {scopes[0]}
    queue: Deque[int] = deque([0])
    while queue and len(scopes) < cfg.edges:
        node = queue.popleft()
        available = sorted(scopes[node])
        rng.shuffle(available)
        for _ in range(rng.randint(1, cfg.branching)):
            if not available or len(scopes) >= cfg.edges:
                break
            taken = rng.randint(1, max(1, min(len(available), cfg.max_edge_size - cfg.min_fresh)))
            inherited, available = available[:taken], available[taken:]
            room = cfg.max_edge_size - taken
            extra = fresh(min(rng.randint(cfg.min_fresh, cfg.max_fresh), room))
            scope = frozenset(inherited + extra)
            if scope in seen and room > len(extra):
                scope = scope | frozenset(fresh(1))
            if scope in seen:
                continue
            seen.add(scope)
            parents[len(scopes)] = node
            queue.append(len(scopes))
            scopes.append(scope)

    constraints = []
    for scope in scopes:
        order = sorted(scope)
        rng.shuffle(order)
        arity = len(order)
        count = rng.randint(min(cfg.min_tuples, 1 << arity), min(cfg.max_tuples, 1 << arity))
        rows = [tuple((code >> i) & 1 for i in range(arity)) for code in rng.sample(range(1 << arity), count)]
        constraints.append(Relation(tuple(order), tuple(rows)))
    inst = CspNegInstance(next_var, tuple(constraints))

    witness = Decomposition.from_parents(parents)
    if not is_valid_decomposition(to_disjunctive(inst).hypergraph, witness):
        raise InvalidDecomposition(f"generator produced an invalid witness (seed {cfg.seed})")
    logger.debug(f"seed {cfg.seed}: {len(scopes)} constraints over {next_var} variables")
    return inst, witness


def hn_hypergraph(n: int) -> Hypergraph:
    """Edges {y_i, x_1..x_n} and {x_i} for i = 1..n; x_i is vertex i-1, y_i is vertex n+i-1."""
    xs = list(range(n))
    edges = [[n + i] + xs for i in range(n)] + [[i] for i in range(n)]
    return Hypergraph.from_edge_sets(edges)


def hn_cnf(n: int, rng: random.Random) -> CspNegInstance:
    """One random clause on every edge of the H_n hypergraph, over 2n variables."""
    clauses = []
    for vertices in hn_hypergraph(n).edge_sets.values():
        clauses.append([(v + 1) * rng.choice((1, -1)) for v in sorted(vertices)])
    return cnf_to_cspneg(clauses, 2 * n)


def random_hypergraph(rng: random.Random, num_edges: int, num_vertices: int, max_edge_size: int = 3) -> Hypergraph:
    """Hypergraph with ``num_edges`` distinct random edges (fewer if the vertex pool is too small)."""
    pool: Set[FrozenSet[int]] = set()
    edges: List[List[int]] = []
    attempts = 0
    while len(edges) < num_edges and attempts < 50 * num_edges:
        attempts += 1
        size = rng.randint(1, min(max_edge_size, num_vertices))
        edge = frozenset(rng.sample(range(num_vertices), size))
        if edge not in pool:
            pool.add(edge)
            edges.append(sorted(edge))
    return Hypergraph.from_edge_sets(edges)


def edge_families(num_vertices: int, max_edges: int) -> Iterator[List[FrozenSet[int]]]:
    """Every family of 1..max_edges distinct non-empty subsets of ``range(num_vertices)``."""
    subsets = [
        frozenset(v for v in range(num_vertices) if mask >> v & 1)
        for mask in range(1, 1 << num_vertices)
    ]
    for size in range(1, max_edges + 1):
        for family in combinations(subsets, size):
            yield list(family)


def canonical_family(family: Iterable[Iterable[int]], num_vertices: int) -> Tuple[int, ...]:
    """Smallest sorted bitmask encoding of ``family`` over all relabelings of its vertices.

    Only relabelings that keep every vertex within its class of equal
    (degree, incident edge sizes) are tried.
    """
    edges = [frozenset(edge) for edge in family]
    signature = {
        v: (sum(1 for e in edges if v in e), tuple(sorted(len(e) for e in edges if v in e)))
        for v in range(num_vertices)
    }
    classes: Dict[tuple, List[int]] = {}
    for v in range(num_vertices):
        classes.setdefault(signature[v], []).append(v)
    groups = [classes[key] for key in sorted(classes)]
    best: Optional[Tuple[int, ...]] = None
    for arrangement in product(*(permutations(group) for group in groups)):
        relabel = {v: i for i, v in enumerate(v for group in arrangement for v in group)}
        key = tuple(sorted(sum(1 << relabel[v] for v in e) for e in edges))
        if best is None or key < best:
            best = key
    return best


def edge_families_up_to_isomorphism(num_vertices: int, max_edges: int) -> Iterator[List[FrozenSet[int]]]:
    """One family per isomorphism class of ``edge_families(num_vertices, max_edges)``.

    Classes of size k are grown from the classes of size k-1 by adding one
    more edge and keeping the canonical form.
    """
    masks = range(1, 1 << num_vertices)
    level: Set[Tuple[int, ...]] = {()}
    for size in range(1, max_edges + 1):
        grown: Set[Tuple[int, ...]] = set()
        for family in level:
            edges = [_mask_set(mask, num_vertices) for mask in family]
            for mask in masks:
                if mask not in family:
                    grown.add(canonical_family(edges + [_mask_set(mask, num_vertices)], num_vertices))
        logger.debug(f"{len(grown)} families of {size} edges on {num_vertices} vertices up to isomorphism")
        for family in sorted(grown):
            yield [_mask_set(mask, num_vertices) for mask in family]
        level = grown


def _mask_set(mask: int, num_vertices: int) -> FrozenSet[int]:
    return frozenset(v for v in range(num_vertices) if mask >> v & 1)


def random_pqf_tree(rng: random.Random, num_leaves: int) -> PQFTree:
    """Random normal-form tree over the leaves ``0..num_leaves-1``."""
    leaves = list(range(num_leaves))
    rng.shuffle(leaves)

    def build(items: List[int]) -> PQFTree:
        if len(items) == 1:
            return PQFTree.leaf(items[0])
        groups = rng.randint(2, len(items))
        cuts = sorted(rng.sample(range(1, len(items)), groups - 1))
        chunks = [items[a:b] for a, b in zip([0] + cuts, cuts + [len(items)])]
        kind = rng.choice((NodeKind.P, NodeKind.Q, NodeKind.F))
        return make(kind, [build(chunk) for chunk in chunks])

    return build(leaves)
