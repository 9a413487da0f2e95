"""Simple undirected graphs, graph6/DOT codecs, hop distances and generators.

Vertices are the dense ids ``0..n-1``.  A :class:`Graph` is immutable once
built; every other module only passes ids around.
"""
from __future__ import annotations

from collections import deque
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Graph",
    "DistMatrix",
    "GraphError",
    "Graph6Error",
    "DisconnectedGraphError",
    "parse_graph6",
    "serialize_graph6",
    "serialize_dot",
    "bfs_distances",
    "is_connected",
    "diameter",
    "components",
    "complete",
    "cycle",
    "path",
    "star",
    "hypercube",
    "complete_multipartite",
    "empty",
    "random_connected",
    "random_tree",
    "disjoint_union",
]


class GraphError(ValueError):
    pass


class Graph6Error(GraphError):
    def __init__(self, msg: str, offset: int):
        super().__init__(f"{msg} (byte offset {offset})")
        self.offset = offset


class DisconnectedGraphError(GraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"graph is disconnected: no path between {u} and {v}")
        self.pair = (u, v)


class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    Loops, repeated edges and out-of-range ids are rejected, not normalized.
    ``labels`` is an optional tuple of unique strings, one per vertex.
    """

    __slots__ = ("n", "edges", "labels", "__dict__")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels: Sequence[str] | None = None):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        canon = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            e = (u, v) if u < v else (v, u)
            if e in canon:
                raise GraphError(f"repeated edge {e}")
            canon.add(e)
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != n:
                raise GraphError(f"{len(labels)} labels for {n} vertices")
            if len(set(labels)) != n:
                raise GraphError("vertex labels must be unique")
        self.n = n
        self.edges = frozenset(canon)
        self.labels = labels

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nb: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    @cached_property
    def adj_mask(self) -> tuple[int, ...]:
        """Neighbourhoods as int bitmasks."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph, re-indexed densely.  Returns ``(graph, old_ids)``."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        edges = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        labels = [self.labels[v] for v in keep] if self.labels is not None else None
        return Graph(len(keep), edges, labels), keep

    def remove_vertex(self, v: int) -> "Graph":
        return self.induced(w for w in range(self.n) if w != v)[0]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``u`` renamed to ``perm[u]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class DistMatrix:
    """All-pairs hop distances of a connected graph (read-only numpy matrix)."""

    __slots__ = ("n", "d", "rows")

    def __init__(self, d: np.ndarray):
        d = np.asarray(d, dtype=np.int64)
        d.setflags(write=False)
        self.n = d.shape[0]
        self.d = d
        self.rows: list[list[int]] = d.tolist()

    def __getitem__(self, uv: tuple[int, int]) -> int:
        u, v = uv
        return self.rows[u][v]

    def __repr__(self) -> str:
        return f"DistMatrix(n={self.n}, diameter={diameter(self)})"


# ---------------------------------------------------------------- graph6

_G6_HEADER = ">>graph6<<"


def _decode_size(data: bytes, base: int) -> tuple[int, int]:
    """Return (n, bytes consumed) for the size prefix of a graph6 body."""

    def chunk(start: int, count: int) -> int:
        if len(data) < start + count:
            raise Graph6Error("truncated size field", base + len(data))
        val = 0
        for k in range(count):
            c = data[start + k]
            if not 63 <= c <= 126:
                raise Graph6Error(f"invalid byte {c!r} in size field", base + start + k)
            val = (val << 6) | (c - 63)
        return val

    if not data:
        raise Graph6Error("empty graph6 string", base)
    if data[0] != 126:
        return chunk(0, 1), 1
    if len(data) > 1 and data[1] == 126:
        return chunk(2, 6), 8
    return chunk(1, 3), 4


def parse_graph6(text: str | bytes) -> Graph:
    if isinstance(text, str):
        raw = text.encode("ascii", errors="replace")
    else:
        raw = bytes(text)
    raw = raw.rstrip(b"\r\n")
    base = 0
    if raw.startswith(_G6_HEADER.encode()):
        base = len(_G6_HEADER)
        raw = raw[base:]
    elif raw.startswith(b">>"):
        raise Graph6Error("malformed header", 0)
    n, used = _decode_size(raw, base)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = raw[used:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated bit field: need {nbytes} bytes, got {len(body)}", base + len(raw))
    if len(body) > nbytes:
        raise Graph6Error("trailing garbage after bit field", base + used + nbytes)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            b = body[k // 6]
            if not 63 <= b <= 126:
                raise Graph6Error(f"invalid byte {b!r} in bit field", base + used + k // 6)
            if ((b - 63) >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    for idx, b in enumerate(body):
        if not 63 <= b <= 126:
            raise Graph6Error(f"invalid byte {b!r} in bit field", base + used + idx)
    return Graph(n, edges)


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def serialize_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if (i, j) in g.edges else 0)
    bits.extend([0] * (-len(bits) % 6))
    out = [_encode_size(g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def serialize_dot(g: Graph, highlight: Iterable[int] = (), name: str = "G") -> str:
    hl = set(highlight)
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        attrs = [f'label="{g.label(v)}"']
        if v in hl:
            attrs.append('style=filled, fillcolor="#e34a33"')
        lines.append(f"  {v} [{', '.join(attrs)}];")
    for u, v in g.sorted_edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------- distances

def _bfs(g: Graph, src: int) -> list[int]:
    dist = [-1] * g.n
    dist[src] = 0
    q = deque([src])
    adj = g.adj
    while q:
        u = q.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                q.append(w)
    return dist


def bfs_distances(g: Graph) -> DistMatrix:
    rows = []
    for s in range(g.n):
        row = _bfs(g, s)
        if -1 in row:
            raise DisconnectedGraphError(s, row.index(-1))
        rows.append(row)
    return DistMatrix(np.array(rows, dtype=np.int64).reshape(g.n, g.n))


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def diameter(d: DistMatrix) -> int:
    return int(d.d.max()) if d.n else 0


# ------------------------------------------------------------ generators

def empty(n: int) -> Graph:
    return Graph(n)


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star(k: int) -> Graph:
    """K_{1,k}: centre 0, leaves 1..k."""
    if k < 1:
        raise GraphError("star needs k >= 1")
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def hypercube(k: int) -> Graph:
    if k < 1:
        raise GraphError("hypercube needs k >= 1")
    n = 1 << k
    return Graph(n, [(u, u ^ (1 << b)) for u in range(n) for b in range(k) if u < u ^ (1 << b)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if not parts or any(p < 1 for p in parts):
        raise GraphError("parts must be a nonempty list of positive sizes")
    owner = [i for i, p in enumerate(parts) for _ in range(p)]
    n = len(owner)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if owner[u] != owner[v]])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    off = 0
    for h in graphs:
        edges.extend((u + off, v + off) for u, v in h.edges)
        off += h.n
    return Graph(off, edges)


def random_connected(n: int, edge_prob: float, seed=None) -> Graph:
    """G(n, p) sample made connected by linking components with random edges.

    Deterministic for a given seed.
    """
    if n < 1:
        raise GraphError("random_connected needs n >= 1")
    if not 0 < edge_prob <= 1:
        raise GraphError(f"edge_prob must lie in (0, 1], got {edge_prob}")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, 1)
    mask = rng.random(iu.size) < edge_prob
    edges = set(zip(iu[mask].tolist(), ju[mask].tolist()))
    comps = components(Graph(n, edges))
    for a, b in zip(comps, comps[1:]):
        u = a[int(rng.integers(len(a)))]
        v = b[int(rng.integers(len(b)))]
        edges.add((min(u, v), max(u, v)))
    return Graph(n, edges)


def random_tree(n: int, seed=None) -> Graph:
    """Uniform labelled tree via a random Pruefer sequence."""
    if n < 1:
        raise GraphError("random_tree needs n >= 1")
    if n <= 2:
        return path(n)
    rng = np.random.default_rng(seed)
    seq = rng.integers(0, n, size=n - 2).tolist()
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    edges = []
    for x in seq:
        leaf = next(i for i in range(n) if deg[i] == 1)
        edges.append((leaf, x))
        deg[leaf] -= 1
        deg[x] -= 1
    u, v = (i for i in range(n) if deg[i] == 1)
    edges.append((u, v))
    return Graph(n, edges)
