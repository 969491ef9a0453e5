"""Anti-Ramsey and Turán numbers of matchings in complete r-partite r-uniform hypergraphs."""

from .canonical import CanonicalLabel, canonical_form
from .constructions import (
    build_phi_r,
    build_qclass_coloring,
    build_turan_extremal,
    qclass_family,
    random_surjective_coloring,
    representing_subhypergraph,
)
from .core import (
    EdgeColoring,
    Matching,
    PartProfile,
    SubHypergraph,
    Vertex,
    codegree,
    degree,
    edge_rank,
    edge_unrank,
    is_disjoint,
    make_profile,
    parse_profile,
    remove_vertex,
)
from .matching import SearchBudget, disjointness_components, has_k_matching, max_matching
from .oracles import (
    ar_exact,
    ar_m2_closed,
    check_uniqueness_coloring,
    ex_exact,
    verify_grid,
)
from .rainbow import cyclic_slices, find_rainbow_k, max_rainbow_matching

__version__ = "0.1.0"
