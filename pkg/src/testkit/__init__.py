from src.testkit.generators import (
    GeneratorConfig,
    canonical_family,
    edge_families,
    edge_families_up_to_isomorphism,
    gen_db_instance,
    hn_cnf,
    hn_hypergraph,
    random_hypergraph,
    random_pqf_tree,
)
from src.testkit.oracles import brute_force_frontiers, exhaustive_db_roots, exhaustive_db_search

__all__ = [
    "GeneratorConfig",
    "brute_force_frontiers",
    "canonical_family",
    "edge_families",
    "edge_families_up_to_isomorphism",
    "exhaustive_db_roots",
    "exhaustive_db_search",
    "gen_db_instance",
    "hn_cnf",
    "hn_hypergraph",
    "random_hypergraph",
    "random_pqf_tree",
]
