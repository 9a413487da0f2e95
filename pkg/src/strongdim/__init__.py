"""Strong metric dimension of graphs, rooted products and corona products."""
from .cover import BudgetExceeded, DimReport, clique_number, min_vertex_cover, strong_dimension, twin_free_clique_number, v_in_some_basis
from .graph_core import (
    DistMatrix,
    Graph,
    GraphError,
    bfs_distances,
    complete,
    cycle,
    diameter,
    hypercube,
    is_connected,
    parse_graph6,
    path,
    random_connected,
    random_tree,
    serialize_dot,
    serialize_graph6,
    star,
)
from .metrics import boundary, max_distant_set, root_context, simplicial, strong_resolving_graph
from .products import FamilyFSpec, corona_product, family_F, join_k1, rooted_product, rooted_product_sequence

__version__ = "0.1.0"
