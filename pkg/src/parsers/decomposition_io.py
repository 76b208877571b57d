"""
JSON documents for disjoint branches decompositions.

A document names the root node and lists every node with its variables
(1-based, as in the instance files) and its children::

    {"root": 0, "nodes": [{"id": 0, "vars": [1, 2], "children": [1]},
                          {"id": 1, "vars": [2, 3], "children": []}]}

Node ids are the edge ids of the hypergraph the document was written for.
Reading ignores them for matching: every node is mapped to the edge with the
same vertex set, so a document stays usable when edges are renumbered.
"""

from __future__ import annotations

import json
import logging
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from src.exceptions import HypergraphError, InvalidDecomposition, SchemaError
from src.hypergraph.decomposition import Decomposition
from src.hypergraph.hypergraph import EdgeId, Hypergraph
from src.hypergraph.validators import is_disjoint_branches, is_join_tree

logger = logging.getLogger(__name__)


class DecompositionNode(BaseModel):
    model_config = ConfigDict(extra="forbid", strict=True)

    id: int
    vars: List[int] = Field(min_length=1)
    children: List[int] = Field(default_factory=list)


class DecompositionDocument(BaseModel):
    model_config = ConfigDict(extra="forbid", strict=True)

    root: int
    nodes: List[DecompositionNode] = Field(min_length=1)


def _variable_number(h: Hypergraph, vertex: int) -> int:
    label = h.label(vertex)
    if not isinstance(label, int):
        raise HypergraphError(f"vertex label {label!r} is not a variable id")
    return label + 1


def to_document(d: Decomposition, h: Hypergraph) -> DecompositionDocument:
    nodes = [
        DecompositionNode(
            id=node,
            vars=sorted(_variable_number(h, v) for v in h.edge(node)),
            children=sorted(d.children[node]),
        )
        for node in sorted(d.nodes)
    ]
    return DecompositionDocument(root=d.root, nodes=nodes)


def write_decomposition(d: Decomposition, h: Hypergraph) -> str:
    """Serialize ``d``; vertex labels of ``h`` must be 0-based variable ids."""
    return to_document(d, h).model_dump_json(indent=2)


def read_decomposition(text: str, h: Hypergraph) -> Decomposition:
    """Parse a document and map it onto the edges of ``h``.

    Raises SchemaError for malformed JSON, duplicate or dangling node ids,
    nodes without a matching edge and edges without a node; raises
    InvalidDecomposition when the tree is not a disjoint branches
    decomposition of ``h``.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    except RecursionError:
        raise SchemaError("JSON nested too deeply") from None
    try:
        doc = DecompositionDocument.model_validate(raw)
    except ValidationError as exc:
        first = exc.errors()[0]
        where = ".".join(str(part) for part in first["loc"])
        raise SchemaError(f"{where}: {first['msg']}") from None

    vertex_of = {_variable_number(h, v): v for v in h.vertices}
    edge_of: Dict[int, EdgeId] = {}
    for node in doc.nodes:
        if node.id in edge_of:
            raise SchemaError(f"duplicate node id {node.id}")
        try:
            vertex_set = frozenset(vertex_of[var] for var in node.vars)
        except KeyError as exc:
            raise SchemaError(f"node {node.id} uses unknown variable {exc.args[0]}") from None
        eid = h.edge_id_for(vertex_set)
        if eid is None:
            raise SchemaError(f"node {node.id} does not match any edge (vars {node.vars})")
        if eid in edge_of.values():
            raise SchemaError(f"node {node.id} repeats the edge of another node")
        edge_of[node.id] = eid
    if len(edge_of) != h.num_edges:
        raise SchemaError(f"document has {len(edge_of)} nodes for {h.num_edges} edges")
    if doc.root not in edge_of:
        raise SchemaError(f"root {doc.root} is not a node")

    parents: Dict[EdgeId, Optional[EdgeId]] = {edge_of[doc.root]: None}
    for node in doc.nodes:
        for child in node.children:
            if child not in edge_of:
                raise SchemaError(f"node {node.id} lists unknown child {child}")
            if edge_of[child] in parents:
                raise SchemaError(f"node {child} has more than one parent or is the root")
            parents[edge_of[child]] = edge_of[node.id]
    if len(parents) != len(edge_of):
        raise SchemaError("some nodes are not reachable from the root")
    try:
        d = Decomposition.from_parents(parents)
    except HypergraphError as exc:
        raise SchemaError(str(exc)) from None

    if not is_join_tree(h, d) or not is_disjoint_branches(h, d):
        raise InvalidDecomposition("document is not a disjoint branches decomposition of the instance")
    logger.debug(f"read decomposition with {len(d)} nodes rooted at edge {d.root}")
    return d
