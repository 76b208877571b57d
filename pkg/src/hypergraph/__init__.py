"""
Hypergraph data model and the checks built on it.

Modules include:

* :mod:`hypergraph` – the immutable ``Hypergraph`` with stable edge ids.
* :mod:`components` – connected components, edge deletion and the seeded
  component split used by the decomposer.
* :mod:`decomposition` – rooted trees over edges.
* :mod:`validators` – join tree, disjoint branches and join-path checks.
* :mod:`acyclicity` – gamma-cycle search and the alpha and beta tests.
"""

from . import acyclicity, components, decomposition, hypergraph, union_find, validators  # noqa: F401
