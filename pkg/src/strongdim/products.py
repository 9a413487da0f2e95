"""Rooted products, corona products, ``K_1 + H`` and the graphs H_{t,p,r}.

Rooted products are laid out copy-major: the vertex ``(a, x)`` (copy of H
attached at g-vertex ``a``, h-vertex ``x``) gets id ``offset[a] + x``, with
``offset[a] = a * |V(H)|`` when all copies are equal.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .graph_core import Graph, GraphError, serialize_graph6

__all__ = [
    "ProductMap",
    "FamilyFSpec",
    "rooted_product",
    "rooted_product_sequence",
    "corona_product",
    "join_k1",
    "family_F",
]


@dataclass(frozen=True)
class ProductMap:
    product: Graph = field(repr=False)
    g_order: int
    h_orders: tuple[int, ...]
    roots: tuple[int, ...]
    _pair_to_id: dict = field(repr=False, compare=False)

    def pair_to_id(self, a: int, x: int) -> int:
        return self._pair_to_id[(a, x)]

    def id_to_pair(self, pid: int) -> tuple[int, int]:
        return self._id_to_pair[pid]

    @property
    def _id_to_pair(self) -> dict:
        inv = self.__dict__.get("_inv")
        if inv is None:
            inv = {v: k for k, v in self._pair_to_id.items()}
            object.__setattr__(self, "_inv", inv)
        return inv

    def copy_ids(self, a: int) -> list[int]:
        """Product ids of copy ``a``, ordered by h-vertex."""
        return [self._pair_to_id[(a, x)] for x in range(self.h_orders[a])]

    def to_dict(self) -> dict:
        return {
            "graph6": serialize_graph6(self.product),
            "g_order": self.g_order,
            "h_orders": list(self.h_orders),
            "roots": list(self.roots),
            "pairs": [[a, x, pid] for (a, x), pid in sorted(self._pair_to_id.items())],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def rooted_product_sequence(g: Graph, rooted_hs: Sequence[tuple[Graph, int]]) -> ProductMap:
    """G(H_1, ..., H_n): root of H_i identified with vertex i of g."""
    if len(rooted_hs) != g.n:
        raise GraphError(f"need {g.n} rooted graphs, got {len(rooted_hs)}")
    if g.n < 1:
        raise GraphError("rooted product needs a nonempty g")
    pairs: dict[tuple[int, int], int] = {}
    edges: list[tuple[int, int]] = []
    off = 0
    for a, (h, root) in enumerate(rooted_hs):
        if h.n < 1:
            raise GraphError(f"H_{a} is empty")
        if not 0 <= root < h.n:
            raise GraphError(f"root {root} invalid for H_{a} of order {h.n}")
        for x in range(h.n):
            pairs[(a, x)] = off + x
        edges.extend((off + x, off + y) for x, y in h.edges)
        off += h.n
    roots = tuple(r for _, r in rooted_hs)
    edges.extend((pairs[(a, roots[a])], pairs[(b, roots[b])]) for a, b in g.edges)
    labels = None
    if all(h.labels is not None for h, _ in rooted_hs) or g.labels is not None:
        labels = [f"({g.label(a)},{h.label(x)})" for a, (h, _) in enumerate(rooted_hs) for x in range(h.n)]
    prod = Graph(off, edges, labels)
    return ProductMap(prod, g.n, tuple(h.n for h, _ in rooted_hs), roots, pairs)


def rooted_product(g: Graph, h: Graph, v: int) -> ProductMap:
    if not 0 <= v < h.n:
        raise GraphError(f"root {v} invalid for H of order {h.n}")
    return rooted_product_sequence(g, [(h, v)] * g.n)


def join_k1(h: Graph) -> tuple[Graph, int]:
    """K_1 + H; the apex is the new last vertex ``h.n``."""
    apex = h.n
    edges = list(h.edges) + [(x, apex) for x in range(h.n)]
    labels = list(h.labels) + ["apex"] if h.labels is not None else None
    return Graph(h.n + 1, edges, labels), apex


def corona_product(g: Graph, h: Graph) -> ProductMap:
    """G ⊙ H built directly: g's vertices first, then one copy of h per g-vertex.

    Pairs use the coordinates of ``join_k1(h)``: ``(a, h.n)`` is g-vertex ``a``.
    """
    if g.n < 1:
        raise GraphError("corona product needs a nonempty g")
    r, t = g.n, h.n
    pairs: dict[tuple[int, int], int] = {}
    edges = list(g.edges)
    for a in range(r):
        pairs[(a, t)] = a
        base = r + a * t
        for x in range(t):
            pairs[(a, x)] = base + x
            edges.append((a, base + x))
        edges.extend((base + x, base + y) for x, y in h.edges)
    prod = Graph(r * (t + 1), edges)
    return ProductMap(prod, r, (t + 1,) * r, (t,) * r, pairs)


@dataclass(frozen=True)
class FamilyFSpec:
    """Parameters of H_{t,p,r}: odd cycle length ``t >= 5``, ``p`` and ``r`` pendant counts."""

    t: int
    p: int
    r: int

    def __post_init__(self):
        if self.t < 5 or self.t % 2 == 0:
            raise GraphError(f"t must be odd and >= 5, got {self.t}")
        if self.p < 1 or self.r < 1:
            raise GraphError(f"p and r must be >= 1, got p={self.p}, r={self.r}")

    @property
    def order(self) -> int:
        return self.t + 1 + self.p + self.r

    @property
    def size(self) -> int:
        return self.t + 2 + self.p + self.r

    @property
    def dim_s(self) -> int:
        return (self.t - 5) // 2 + self.p + self.r


def family_F(spec: FamilyFSpec) -> tuple[Graph, dict]:
    """H_{t,p,r}: the cycle x_1..x_t with pendant y at x_t, chord x_1 x_{t-1},
    p pendants w_i at x_{floor(t/2)} and r pendants z_j at x_{ceil(t/2)}.

    Ids: x_k -> k-1, y -> t, w_i -> t+i, z_j -> t+p+j.  ``marks`` maps the
    names y, x_t, x_1, x_{t-1} to ids and W, Z, X to id lists.
    """
    t, p, r = spec.t, spec.p, spec.r
    x = lambda k: k - 1  # noqa: E731
    y = t
    W = [t + i for i in range(1, p + 1)]
    Z = [t + p + j for j in range(1, r + 1)]
    edges = [(x(k), x(k % t + 1)) for k in range(1, t + 1)]
    edges.append((y, x(t)))
    edges.append((x(1), x(t - 1)))
    edges.extend((x(t // 2), w) for w in W)
    edges.extend((x((t + 1) // 2), z) for z in Z)
    labels = [f"x{k}" for k in range(1, t + 1)] + ["y"] + [f"w{i}" for i in range(1, p + 1)] + [f"z{j}" for j in range(1, r + 1)]
    g = Graph(spec.order, edges, labels)
    marks = {
        "y": y,
        "x_t": x(t),
        "x_1": x(1),
        "x_t-1": x(t - 1),
        "X": [x(k) for k in range(1, t + 1)],
        "W": W,
        "Z": Z,
    }
    return g, marks
