"""
Relations, instance transforms and the counting dynamic program.

* :mod:`relations` – relations, partial assignments and instances.
* :mod:`transform` – CNF to negative representation and to a disjunction.
* :mod:`dp` – counting over a disjoint branches decomposition.
* :mod:`models` – model counting per connected component and the brute-force reference.
"""

from . import dp, models, relations, transform  # noqa: F401
