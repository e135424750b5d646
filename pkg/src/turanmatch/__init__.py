"""Exact extremal combinatorics for graphs with bounded matching number.

Core pieces: bitmask graphs with an edge-list file format, the edge-shifting
compression operation, exact matching and pattern counters, closed-form
extremal evaluators, and a brute-force oracle that re-derives every law by
exhaustive search at small sizes.
"""

from .counting import StarCliquePair, count_bip, count_cliques, count_star, star_pairs
from .errors import (
    CapacityError,
    DuplicateEdgeError,
    LabelRangeError,
    MalformedLineError,
    ParameterRangeError,
    ParseError,
    SelfLoopError,
)
from .extremal import (
    EndpointMax,
    ExtremalParams,
    binom,
    bip_split_count,
    bip_split_count_sym,
    endpoint_max,
    ex_bip,
    ex_clique,
    ex_edges,
    ex_star,
    extremal_clique_count,
    extremal_star_count,
    extremal_star_terms,
)
from .graph import (
    BipartiteGraph,
    Edge,
    Graph,
    complete_graph,
    empty_graph,
    extremal_graph,
    join,
    parse_bipartite,
    parse_graph,
    serialize_bipartite,
    serialize_graph,
)
from .matching import (
    bip_max_matching,
    bondy_chvatal_holds,
    koenig_cover,
    matching_number,
)
from .oracle import (
    Check,
    Witness,
    iter_free_graphs,
    max_over_free,
    max_over_free_bip,
    verify_bondy_chvatal,
    verify_koenig_gstar,
    verify_shift_lemmas,
    verify_shifted_structure,
)
from .shifting import compress, is_shifted, shift_edge, shift_graph, shifted_graphs

__version__ = "0.1.0"
