"""Diverse solutions over graphs: shortest st-paths, spanning trees, and
fixed-size bipartite matchings maximizing the pairwise weighted Hamming
diversity."""

from divsol._core import (
    BipartiteGraph,
    DirectedGraph,
    DiverseBasesResult,
    DiverseMatchingsResult,
    DiversePathsResult,
    InfeasibleError,
    ParseError,
    PathResult,
    SolutionSet,
    UndirectedGraph,
    copy_weight,
    diverse_bipartite_matchings,
    diverse_shortest_paths,
    diverse_spanning_trees,
    diversity_multiplicity,
    diversity_pairwise,
    generate_grid,
    parse_bipartite,
    parse_dimacs,
    parse_snap,
    parse_undirected,
    yen_k_shortest,
)

__all__ = [
    "BipartiteGraph",
    "DirectedGraph",
    "DiverseBasesResult",
    "DiverseMatchingsResult",
    "DiversePathsResult",
    "InfeasibleError",
    "ParseError",
    "PathResult",
    "SolutionSet",
    "UndirectedGraph",
    "copy_weight",
    "diverse_bipartite_matchings",
    "diverse_shortest_paths",
    "diverse_spanning_trees",
    "diversity_multiplicity",
    "diversity_pairwise",
    "generate_grid",
    "parse_bipartite",
    "parse_dimacs",
    "parse_snap",
    "parse_undirected",
    "yen_k_shortest",
]
