"""Maximal-distance structure of a connected graph.

Boundary, simplicial vertices, the strong resolving graph and the per-root
sets ``M(v)``, ``i(v)``, ``i'(v)``, plus a handful of structural predicates.
Functions take the graph first and accept a precomputed :class:`DistMatrix`
to avoid repeated BFS.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from .graph_core import DistMatrix, Graph, bfs_distances, is_connected, serialize_dot, serialize_graph6

__all__ = [
    "SRGraph",
    "RootContext",
    "is_maximally_distant",
    "is_mmd",
    "max_distant_set",
    "mmd_pairs",
    "boundary",
    "simplicial",
    "strong_resolving_graph",
    "root_context",
    "is_2_antipodal",
    "true_twins",
    "universal_vertices",
    "leaves",
    "is_tree",
    "is_triangle_free",
    "sr_is_perfect_matching",
]


def _dist(g: Graph, dist: DistMatrix | None) -> DistMatrix:
    return bfs_distances(g) if dist is None else dist


def is_maximally_distant(g: Graph, u: int, v: int, dist: DistMatrix | None = None) -> bool:
    """True iff no neighbour of ``u`` is farther from ``v`` than ``u`` is."""
    rows = _dist(g, dist).rows
    duv = rows[u][v]
    rv = rows[v]
    return all(rv[w] <= duv for w in g.adj[u])


def is_mmd(g: Graph, u: int, v: int, dist: DistMatrix | None = None) -> bool:
    dist = _dist(g, dist)
    return is_maximally_distant(g, u, v, dist) and is_maximally_distant(g, v, u, dist)


def max_distant_set(g: Graph, v: int, dist: DistMatrix | None = None) -> frozenset[int]:
    """M(v): every vertex maximally distant from ``v``."""
    dist = _dist(g, dist)
    return frozenset(u for u in range(g.n) if is_maximally_distant(g, u, v, dist))


def _md_table(g: Graph, dist: DistMatrix) -> list[list[bool]]:
    # md[u][v]: u is maximally distant from v
    rows = dist.rows
    adj = g.adj
    md = [[False] * g.n for _ in range(g.n)]
    for u in range(g.n):
        ru = rows[u]
        nbrs = adj[u]
        for v in range(g.n):
            duv = ru[v]
            rv = rows[v]
            md[u][v] = all(rv[w] <= duv for w in nbrs)
    return md


def mmd_pairs(g: Graph, dist: DistMatrix | None = None) -> frozenset[tuple[int, int]]:
    """All unordered mutually maximally distant pairs ``(u, v)`` with ``u < v``."""
    md = _md_table(g, _dist(g, dist))
    return frozenset((u, v) for u, v in combinations(range(g.n), 2) if md[u][v] and md[v][u])


def boundary(g: Graph, dist: DistMatrix | None = None) -> frozenset[int]:
    return frozenset(x for e in mmd_pairs(g, dist) for x in e)


def simplicial(g: Graph) -> frozenset[int]:
    out = []
    for v in range(g.n):
        nb = sorted(g.adj[v])
        if all(g.has_edge(a, b) for a, b in combinations(nb, 2)):
            out.append(v)
    return frozenset(out)


@dataclass(frozen=True)
class SRGraph:
    """Strong resolving graph: boundary vertices joined when mutually maximally distant.

    Vertex ids are host ids.  Isolated vertices never occur, since every
    boundary vertex has an MMD partner by definition.
    """

    host: Graph = field(repr=False)
    boundary: tuple[int, ...]
    sr_edges: frozenset[tuple[int, int]]

    def neighbours(self, v: int) -> frozenset[int]:
        return frozenset(b if a == v else a for a, b in self.sr_edges if v in (a, b))

    def as_graph(self) -> tuple[Graph, list[int]]:
        """Dense re-indexing; returns ``(graph, host_ids)`` with ``host_ids[k]`` the host id of SR vertex k."""
        pos = {v: k for k, v in enumerate(self.boundary)}
        labels = [self.host.label(v) for v in self.boundary]
        g = Graph(len(self.boundary), [(pos[a], pos[b]) for a, b in self.sr_edges], labels)
        return g, list(self.boundary)

    def to_graph6(self) -> str:
        return serialize_graph6(self.as_graph()[0])

    def id_map_json(self) -> str:
        return json.dumps({"sr_to_host": {str(k): v for k, v in enumerate(self.boundary)}})

    def to_dot(self, highlight=()) -> str:
        g, ids = self.as_graph()
        pos = {v: k for k, v in enumerate(ids)}
        return serialize_dot(g, [pos[v] for v in highlight if v in pos], name="SR")


def strong_resolving_graph(g: Graph, dist: DistMatrix | None = None) -> SRGraph:
    pairs = mmd_pairs(g, dist)
    bd = tuple(sorted({x for e in pairs for x in e}))
    return SRGraph(g, bd, pairs)


@dataclass(frozen=True)
class RootContext:
    """The sets a rooted-product formula needs about the root ``v`` of ``host``.

    ``canonical`` is False when the host's SR graph is not a perfect
    matching; ``i_prime`` is then just the union of SR neighbours of ``i``
    and formulas that need a well-defined i'(v) must refuse the context.
    """

    host: Graph = field(repr=False)
    root: int
    M: frozenset[int]
    i: frozenset[int]
    i_prime: frozenset[int]
    canonical: bool


def root_context(g: Graph, v: int, dist: DistMatrix | None = None, sr: SRGraph | None = None) -> RootContext:
    dist = _dist(g, dist)
    sr = strong_resolving_graph(g, dist) if sr is None else sr
    M = max_distant_set(g, v, dist)
    iso = frozenset(a for a in M if not (sr.neighbours(a) & M))
    partners = frozenset(b for a in iso for b in sr.neighbours(a))
    return RootContext(g, v, M, iso, partners, sr_is_perfect_matching(sr))


# ------------------------------------------------------------ predicates

def is_2_antipodal(g: Graph, dist: DistMatrix | None = None) -> bool:
    dist = _dist(g, dist)
    if g.n < 2:
        return False
    D = int(dist.d.max())
    return all(row.count(D) == 1 for row in dist.rows)


def true_twins(g: Graph) -> list[tuple[int, int]]:
    closed = [g.adj_mask[v] | (1 << v) for v in range(g.n)]
    return [(u, v) for u, v in combinations(range(g.n), 2) if closed[u] == closed[v]]


def universal_vertices(g: Graph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if g.degree(v) == g.n - 1)


def leaves(g: Graph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if g.degree(v) == 1)


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def is_triangle_free(g: Graph) -> bool:
    am = g.adj_mask
    return not any(am[u] & am[v] for u, v in g.edges)


def sr_is_perfect_matching(sr: SRGraph) -> bool:
    """True iff the SR graph is a disjoint union of K_2."""
    deg: dict[int, int] = {}
    for a, b in sr.sr_edges:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    return bool(deg) and all(c == 1 for c in deg.values())
