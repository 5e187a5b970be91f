"""Monomial ideals: Hilbert series, graded Betti numbers and regularity."""

from .betti import (
    BettiTable,
    InvariantsReport,
    SimplicialComplex,
    betti_table,
    depth,
    invariants_report,
    projective_dimension,
    reduced_homology_dims,
    regularity,
    regularity_quotient,
    stanley_reisner_complex,
)
from .families import (
    Graph,
    edge_ideal,
    family_ideal,
    ferrers_graph,
    g2_graph,
    herzog_example,
    parse_family_spec,
    sqfree_lex_ideal,
    star_triangle,
    theorem_main_ideal,
)
from .formats import parse_graph_file, parse_ideal_file
from .hilbert import HilbertSeries, h_polynomial, hilbert_function_prefix, hilbert_series, krull_dim
from .ideal import (
    IdealError,
    MonomialIdeal,
    RingContext,
    colon_by_monomial,
    contains,
    embed_tensor,
    ideal_from_strings,
    ideal_product,
    ideal_sum,
    is_squarefree,
    is_squarefree_lexsegment,
    is_strongly_stable,
    make_ideal,
    polarize,
)
from .oracle import brute_force_hilbert, taylor_betti

__all__ = [name for name in dir() if not name.startswith("_")]
