"""
Acyclicity classification of a hypergraph.

* alpha: GYO reduction.
* beta: alpha-test on every edge subset, only at desk scale.
* gamma: db-rootable at every edge of its component.
* disjoint_branches: some root works in every component.
* join_path: a consecutive arrangement of all edges exists.

The flags always satisfy gamma => disjoint_branches => beta => alpha, and
join_path => disjoint_branches.
"""

from __future__ import annotations

import logging
from typing import Optional

from pydantic import BaseModel

from src.config import settings
from src.decomposer.compute_db import find_decomposition, rootable_edges
from src.exceptions import NotDecomposable, Rejection
from src.hypergraph.acyclicity import is_alpha_acyclic, is_beta_acyclic
from src.hypergraph.hypergraph import Hypergraph
from src.pqtree.builder import build_pq_tree

logger = logging.getLogger(__name__)


class AcyclicityReport(BaseModel):
    edges: int
    vertices: int
    alpha: bool
    beta: Optional[bool] = None
    gamma: bool
    disjoint_branches: bool
    join_path: bool


def classify(h: Hypergraph, beta: Optional[bool] = None) -> AcyclicityReport:
    """Classify ``h``.

    ``beta=None`` runs the beta-test only when ``h`` is within
    ``BETA_MAX_EDGES`` and otherwise reports ``None``; ``beta=True`` always
    runs it (and may raise SizeGuardExceeded); ``beta=False`` skips it.
    """
    try:
        find_decomposition(h)
        disjoint_branches = True
    except NotDecomposable:
        disjoint_branches = False
    gamma = disjoint_branches and len(rootable_edges(h)) == h.num_edges

    join_path = True
    if h.num_edges:
        try:
            build_pq_tree(h, h.edge_ids)
        except Rejection:
            join_path = False

    if beta is None:
        beta = h.num_edges <= settings.BETA_MAX_EDGES
    beta_flag = is_beta_acyclic(h) if beta else None
    report = AcyclicityReport(
        edges=h.num_edges,
        vertices=len(h.vertices),
        alpha=is_alpha_acyclic(h),
        beta=beta_flag,
        gamma=gamma,
        disjoint_branches=disjoint_branches,
        join_path=join_path,
    )
    logger.debug(f"classified {h!r}: {report}")
    return report
