"""Exact Hilbert-series calculus for graph-indexed operadic structures.

The building blocks: exact polynomials in q^(1/2) (:mod:`.qpoly`), truncated
power series (:mod:`.series`), graphs with tubes / partitions / contraction
(:mod:`.graphs`), the convolution algebra of graphic functions
(:mod:`.graphic_functions`), one-parameter family series and closed forms
(:mod:`.family_series`), symmetric-function valued Young series
(:mod:`.symfunc`, :mod:`.young`), and the admissible-tree counting oracles
(:mod:`.trees`).
"""

from .qpoly import QPoly, ExactDivisionError
from .series import PowerSeries, series_compose, series_reverse, series_transcendental
from .graphs import (
    Graph,
    EnumerationCaps,
    canonical_graph,
    canonical_key,
    chromatic_polynomial,
    complete_graph,
    connected_graphs_upto,
    contract,
    contract_tube,
    count_acyclic_orientations,
    cycle_graph,
    enumerate_tubes,
    family_graph,
    graph_partitions,
    induced_subgraph,
    multipartite_graph,
    path_graph,
    star_graph,
)
from .graphic_functions import (
    GraphicFunction,
    chromatic_gf,
    chromatic_symfun_tree_gf,
    convolve,
    gerst_hilbert_gf,
    gerst_total_dim,
    grav_weighted_gf,
    hyper_weighted_gf,
    mobius_gf,
    one_gf,
    one_q_gf,
    one_q_odd_gf,
    star_inverse,
    unit_gf,
    wonderful_complex_gf,
    wonderful_real_gf,
)
from .family_series import FamilySeries, check_family_composition, closed_form, family_series
from .symfunc import SymFunc
from .young import (
    BiSeries,
    YoungSeries,
    two_color_specialize,
    young_closed_form,
    young_compose,
    young_of_graphic,
    young_reverse,
)
from .trees import (
    AdmissibleTree,
    enumerate_admissible_trees,
    enumerate_binary_trees,
    gcass_dimension,
    gccom_normal,
    gcgrav_normal_counts,
    gchyper_normal_counts,
    gclie_normal_count,
    nested_set_count,
    stable_tree_count,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
