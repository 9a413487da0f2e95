from itertools import combinations

import networkx as nx
import numpy as np
import pytest
from hypothesis import strategies as st

from strongdim.graph_core import Graph, components
from strongdim.harness import to_networkx


@st.composite
def connected_graphs(draw, min_n=2, max_n=8):
    """Arbitrary edge set, then components chained through their lowest ids."""
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    picks = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = {e for e, keep in zip(pairs, picks) if keep}
    comps = components(Graph(n, edges))
    for a, b in zip(comps, comps[1:]):
        edges.add((a[0], b[0]))
    return Graph(n, edges)


@st.composite
def any_graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    picks = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, picks) if keep])


def isomorphic(a: Graph, b: Graph) -> bool:
    return nx.is_isomorphic(to_networkx(a), to_networkx(b))


def brute_min_cover_size(n, edges) -> int:
    for k in range(n + 1):
        for s in combinations(range(n), k):
            ss = set(s)
            if all(u in ss or v in ss for u, v in edges):
                return k
    return n


def mmd_edges_by_definition(g: Graph) -> set:
    """SR edges straight from the definition, on networkx distances."""
    d = dict(nx.all_pairs_shortest_path_length(to_networkx(g)))
    def md(u, v):
        return all(d[v][w] <= d[u][v] for w in g.adj[u])
    return {(u, v) for u, v in combinations(range(g.n), 2) if md(u, v) and md(v, u)}


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
