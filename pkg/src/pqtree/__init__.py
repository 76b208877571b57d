"""
PQ- and PQF-trees over edge ids.

* :mod:`tree` – the tree type, normal form and frontier enumeration.
* :mod:`builder` – the PQ-tree of all join paths of an edge set.
* :mod:`surgery` – subtree location, forcing and inclusion-order restriction.
"""

from . import builder, surgery, tree  # noqa: F401
