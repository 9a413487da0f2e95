"""Exact combinatorial solvers.

Minimum vertex cover by branch and bound (the engine behind the strong
metric dimension), maximum clique, twin-free maximum clique, and the
"does v lie in some strong metric basis" decision.  Everything works on
int bitmasks over dense vertex indices.
"""
from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass

from .graph_core import Graph, GraphError, bfs_distances
from .metrics import SRGraph, strong_resolving_graph

__all__ = [
    "BudgetExceeded",
    "DimReport",
    "DEFAULT_BUDGET",
    "default_budget",
    "min_vertex_cover",
    "vertex_cover_number",
    "strong_dimension",
    "v_in_some_basis",
    "clique_number",
    "twin_free_clique_number",
]

DEFAULT_BUDGET = 10**6


def default_budget() -> int:
    """Branch-node budget, overridable with ``STRONGDIM_BUDGET``."""
    raw = os.environ.get("STRONGDIM_BUDGET")
    if raw:
        val = int(raw)
        if val <= 0:
            raise ValueError("STRONGDIM_BUDGET must be positive")
        return val
    return DEFAULT_BUDGET


class BudgetExceeded(RuntimeError):
    def __init__(self, budget: int):
        super().__init__(f"branch-node budget of {budget} exceeded")
        self.budget = budget


@dataclass(frozen=True)
class DimReport:
    value: int
    basis: frozenset[int]
    method: str
    elapsed_ms: float = 0.0
    branch_nodes: int = 0

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "basis": sorted(self.basis),
            "method": self.method,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "branch_nodes": self.branch_nodes,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(x: int) -> int:
    return bin(x).count("1")


class _VertexCoverSolver:
    def __init__(self, adj: list[int], budget: int):
        self.adj = adj
        self.budget = budget
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.budget)

    # lower bounds -------------------------------------------------------
    def lower_bound(self, alive: int) -> int:
        adj = self.adj
        # greedy clique partition: a clique of size k needs k-1 cover vertices
        order = sorted(_bits(alive), key=lambda v: (-_popcount(adj[v] & alive), v))
        cliques: list[int] = []
        common: list[int] = []
        for v in order:
            for k, c in enumerate(cliques):
                if common[k] >> v & 1:
                    cliques[k] |= 1 << v
                    common[k] &= adj[v]
                    break
            else:
                cliques.append(1 << v)
                common.append(adj[v] & alive)
        lb_clique = sum(_popcount(c) - 1 for c in cliques)
        # greedy maximal matching
        free = alive
        lb_match = 0
        for v in order:
            if free >> v & 1:
                nb = adj[v] & free
                if nb:
                    u = (nb & -nb).bit_length() - 1
                    free &= ~((1 << v) | (1 << u))
                    lb_match += 1
        return max(lb_clique, lb_match)

    def reduce(self, alive: int) -> tuple[int, int]:
        """Degree-0 removal and degree-1 forcing.  Returns (alive, forced)."""
        adj = self.adj
        forced = 0
        changed = True
        while changed:
            changed = False
            for v in _bits(alive):
                if not alive >> v & 1:
                    continue
                nb = adj[v] & alive
                if nb == 0:
                    alive &= ~(1 << v)
                    changed = True
                elif nb & (nb - 1) == 0:
                    forced |= nb
                    alive &= ~(nb | (1 << v))
                    changed = True
        return alive, forced

    def components(self, alive: int) -> list[int]:
        adj = self.adj
        out = []
        rest = alive
        while rest:
            seed = rest & -rest
            comp = seed
            frontier = seed
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= adj[v]
                nxt &= alive & ~comp
                comp |= nxt
                frontier = nxt
            out.append(comp)
            rest &= ~comp
        return out

    def solve(self, alive: int, limit: int) -> int | None:
        """A minimum cover of the subgraph on ``alive`` if its size is < ``limit``, else None."""
        self.tick()
        alive, forced = self.reduce(alive)
        nf = _popcount(forced)
        limit -= nf
        if limit <= 0:
            return None
        if not alive:
            return forced
        comps = self.components(alive)
        if len(comps) > 1:
            lbs = [self.lower_bound(c) for c in comps]
            if sum(lbs) >= limit:
                return None
            total = forced
            used = 0
            for k, c in enumerate(comps):
                rest_lb = sum(lbs[k + 1:])
                sub = self.solve(c, limit - used - rest_lb)
                if sub is None:
                    return None
                used += _popcount(sub)
                total |= sub
            return total
        if self.lower_bound(alive) >= limit:
            return None
        adj = self.adj
        v = max(_bits(alive), key=lambda x: (_popcount(adj[x] & alive), -x))
        nb = adj[v] & alive
        best = None
        sub = self.solve(alive & ~(1 << v), limit - 1)
        if sub is not None:
            best = sub | (1 << v)
            limit = _popcount(best)
        k = _popcount(nb)
        if k < limit:
            sub = self.solve(alive & ~nb & ~(1 << v), limit - k)
            if sub is not None:
                best = sub | nb
        return None if best is None else best | forced


def _greedy_cover(adj: list[int], alive: int) -> int:
    cover = 0
    while True:
        degs = [(_popcount(adj[v] & alive), v) for v in _bits(alive)]
        degs = [d for d in degs if d[0] > 0]
        if not degs:
            return cover
        _, v = max(degs, key=lambda t: (t[0], -t[1]))
        cover |= 1 << v
        alive &= ~(1 << v)


def _min_cover_masks(n: int, edges, budget: int | None) -> tuple[int, int]:
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    budget = default_budget() if budget is None else budget
    solver = _VertexCoverSolver(adj, budget)
    alive = (1 << n) - 1
    greedy = _greedy_cover(adj, alive)
    best = solver.solve(alive, _popcount(greedy))
    return (greedy if best is None else best), solver.nodes


def min_vertex_cover(obj: Graph | SRGraph, budget: int | None = None, *, return_nodes: bool = False):
    """Minimum vertex cover of a graph or of an SR graph (ids are host ids for SR graphs).

    Raises :class:`BudgetExceeded` rather than return an unproven answer.
    """
    if isinstance(obj, SRGraph):
        g, ids = obj.as_graph()
    else:
        g, ids = obj, list(range(obj.n))
    mask, nodes = _min_cover_masks(g.n, g.edges, budget)
    cover = frozenset(ids[k] for k in _bits(mask))
    return (cover, nodes) if return_nodes else cover


def vertex_cover_number(obj: Graph | SRGraph, budget: int | None = None) -> int:
    return len(min_vertex_cover(obj, budget))


def strong_dimension(g: Graph, budget: int | None = None) -> DimReport:
    """dim_s(g) as the vertex cover number of its strong resolving graph."""
    if g.n < 2:
        raise GraphError("strong metric dimension needs at least two vertices")
    t0 = time.perf_counter()
    sr = strong_resolving_graph(g, bfs_distances(g))
    cover, nodes = min_vertex_cover(sr, budget, return_nodes=True)
    ms = (time.perf_counter() - t0) * 1e3
    return DimReport(len(cover), cover, "reduction", ms, nodes)


def v_in_some_basis(g: Graph, v: int, budget: int | None = None, sr: SRGraph | None = None) -> bool:
    """Whether ``v`` belongs to at least one strong metric basis of ``g``.

    ``v`` is in some minimum cover of the SR graph iff it is an SR vertex and
    deleting it lowers the cover number by one.
    """
    if g.n < 2:
        raise GraphError("strong metric dimension needs at least two vertices")
    sr = strong_resolving_graph(g) if sr is None else sr
    if v not in sr.boundary:
        return False
    g_sr, ids = sr.as_graph()
    k = ids.index(v)
    alpha = vertex_cover_number(g_sr, budget)
    rest = [(a, b) for a, b in g_sr.edges if k not in (a, b)]
    mask, _ = _min_cover_masks(g_sr.n, rest, budget)
    return _popcount(mask) == alpha - 1


# --------------------------------------------------------------- cliques

def _max_clique(adj: list[int], cand: int, forbid: list[int] | None = None) -> int:
    """Maximum clique inside ``cand`` as a bitmask.

    ``forbid[v]`` lists vertices that may not share a clique with ``v``.
    Greedy colouring gives the upper bound.
    """
    best = 0
    best_size = 0

    def colour_bound(p: int) -> int:
        colours = 0
        rest = p
        while rest:
            colours += 1
            avail = rest
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                rest &= ~low
                avail &= ~low & ~adj[v]
        return colours

    def expand(clique: int, size: int, p: int):
        nonlocal best, best_size
        if not p:
            if size > best_size:
                best, best_size = clique, size
            return
        if size + colour_bound(p) <= best_size:
            return
        while p:
            if size + _popcount(p) <= best_size:
                return
            low = p & -p
            v = low.bit_length() - 1
            nxt = p & adj[v]
            if forbid is not None:
                nxt &= ~forbid[v]
            expand(clique | low, size + 1, nxt)
            p &= ~low

    expand(0, 0, cand)
    return best


def clique_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    return _popcount(_max_clique(list(g.adj_mask), (1 << g.n) - 1))


def twin_free_clique_number(g: Graph) -> int:
    """Largest clique with no two members having equal closed neighbourhoods."""
    if g.n == 0:
        return 0
    closed = [g.adj_mask[v] | (1 << v) for v in range(g.n)]
    forbid = [0] * g.n
    for u in range(g.n):
        for v in range(g.n):
            if u != v and closed[u] == closed[v]:
                forbid[u] |= 1 << v
    return _popcount(_max_clique(list(g.adj_mask), (1 << g.n) - 1, forbid))
