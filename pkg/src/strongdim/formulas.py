"""Closed formulas and bounds for dim_s of rooted and corona products.

Each function checks its hypotheses exactly and raises
:class:`PreconditionError` when they fail; none of them falls back to the
solver for the product itself.  Factor invariants (dim_s of H, basis
membership) are computed exactly with :mod:`strongdim.cover`.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .cover import clique_number, strong_dimension, twin_free_clique_number, v_in_some_basis
from .graph_core import Graph, bfs_distances, diameter, is_connected
from .metrics import (
    boundary,
    is_2_antipodal,
    is_triangle_free,
    leaves,
    root_context,
    simplicial,
    sr_is_perfect_matching,
    strong_resolving_graph,
    true_twins,
    universal_vertices,
)
from .products import FamilyFSpec, family_F, join_k1

__all__ = [
    "PreconditionError",
    "FormulaResult",
    "dim_simplicial_boundary",
    "dim_corona_of_cliques",
    "dim_matching_sr",
    "dim_antipodal",
    "dim_cycle_rooted",
    "dim_universal_root",
    "dim_corona",
    "bounds_general",
    "bound_pendant",
    "family_F_product_value",
]


class PreconditionError(ValueError):
    """A formula refused its input; ``failed`` names the hypotheses that do not hold."""

    def __init__(self, msg: str, failed: list[str] | None = None):
        super().__init__(msg)
        self.failed = failed or []


@dataclass
class FormulaResult:
    """Outcome of one formula.

    Exact formulas set ``value``.  Bounds set ``lower``/``upper`` (either may
    be None for one-sided bounds).  Multi-branch formulas record every fired
    branch in ``branches``; ``value`` is their common value, or None when
    they disagree.
    """

    case: str
    value: int | None = None
    lower: int | None = None
    upper: int | None = None
    preconditions_verified: list[str] = field(default_factory=list)
    branches: dict[str, int] = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        return len(set(self.branches.values())) <= 1

    def contains(self, x: int) -> bool:
        if self.value is not None:
            return x == self.value
        return (self.lower is None or self.lower <= x) and (self.upper is None or x <= self.upper)

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "value": self.value,
            "lower": self.lower,
            "upper": self.upper,
            "preconditions_verified": self.preconditions_verified,
            "branches": self.branches,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _need_order(n: int, name: str = "G", least: int = 2):
    if n < least:
        raise PreconditionError(f"{name} must have order >= {least}, got {n}", [f"order({name})>={least}"])


def _need_connected(h: Graph, name: str = "H"):
    if not is_connected(h):
        raise PreconditionError(f"{name} must be connected", [f"connected({name})"])


def dim_simplicial_boundary(g: Graph, h: Graph, v: int) -> FormulaResult:
    """Case boundary(H) == simplicial(H)."""
    _need_order(g.n)
    _need_connected(h)
    bd = boundary(h)
    sg = simplicial(h)
    if bd != sg:
        witness = min(bd ^ sg)
        raise PreconditionError(
            f"boundary != simplicial set; vertex {witness} lies in exactly one of them",
            ["boundary==simplicial"],
        )
    n = g.n
    checks = ["order(G)>=2", "connected(H)", "boundary==simplicial"]
    if v in bd:
        return FormulaResult("simplicial_boundary.root_in_boundary", n * (len(bd) - 1) - 1, preconditions_verified=checks)
    return FormulaResult("simplicial_boundary.root_inner", n * len(bd) - 1, preconditions_verified=checks)


def dim_corona_of_cliques(n: int, n_prime: int, clique_sizes: list[int], root_in_clique: bool) -> FormulaResult:
    """H = G' ⊙ (K_{t_1} ∪ ... ∪ K_{t_r}) with |V(G')| = ``n_prime`` and r >= 2.

    Here the boundary equals the simplicial set and has n' * sum(t_i) vertices.
    """
    _need_order(n)
    _need_order(n_prime, "G'", least=1)
    if len(clique_sizes) < 2 or min(clique_sizes) < 1:
        raise PreconditionError("need r >= 2 cliques of size >= 1", ["r>=2", "t_i>=1"])
    s = n_prime * sum(clique_sizes)
    if root_in_clique:
        return FormulaResult("corona_cliques.root_in_clique", n * s - n - 1, preconditions_verified=["r>=2"])
    return FormulaResult("corona_cliques.root_in_core", n * s - 1, preconditions_verified=["r>=2"])


def dim_matching_sr(g: Graph, h: Graph, v: int) -> FormulaResult:
    """Case: the SR graph of H is a disjoint union of K_2."""
    _need_order(g.n)
    _need_connected(h)
    dist = bfs_distances(h)
    sr = strong_resolving_graph(h, dist)
    if not sr_is_perfect_matching(sr):
        raise PreconditionError("SR graph of H is not a disjoint union of K_2", ["sr_perfect_matching"])
    ctx = root_context(h, v, dist, sr)
    n, B, M, I = g.n, len(sr.boundary), len(ctx.M), len(ctx.i)
    in_bd = v in sr.boundary
    num = n * (B + M - I) - M + I - (2 if in_bd else 0)
    if num % 2:
        raise PreconditionError(
            f"odd numerator {num} (|bd|={B}, |M|={M}, |i|={I}); instance violates a hypothesis",
            ["parity"],
        )
    case = "matching_sr.root_in_boundary" if in_bd else "matching_sr.root_outside_boundary"
    return FormulaResult(case, num // 2, preconditions_verified=["order(G)>=2", "connected(H)", "sr_perfect_matching"])


def dim_antipodal(n: int, h: Graph) -> FormulaResult:
    _need_order(n)
    _need_connected(h)
    if not is_2_antipodal(h):
        raise PreconditionError("H is not 2-antipodal", ["2-antipodal(H)"])
    return FormulaResult("antipodal", n * h.n // 2 - 1, preconditions_verified=["order(G)>=2", "2-antipodal(H)"])


def dim_cycle_rooted(r: int, t: int) -> FormulaResult:
    _need_order(r)
    if t < 3:
        raise PreconditionError(f"cycle order must be >= 3, got {t}", ["t>=3"])
    return FormulaResult("cycle", r * ((t + 1) // 2) - 1, preconditions_verified=["order(G)>=2", "t>=3"])


def _dim_s(h: Graph) -> int:
    return strong_dimension(h).value


def _corona_branches(r: int, h: Graph) -> tuple[dict[str, int], list[str]]:
    """Every corona-product branch whose hypotheses hold for G of order r, together with the failed ones."""
    t = h.n
    delta = h.max_degree()
    fired: dict[str, int] = {}
    failed: list[str] = []
    deg_ok = delta <= t - 2 or r >= 2
    if deg_ok:
        fired["corona.twin_free_clique"] = r * t - twin_free_clique_number(h)
    else:
        failed.append("corona.twin_free_clique: Delta<=t-2 or r>=2")
    # stated hypotheses plus Delta>=2; without it the branch is false (e.g. H = 3K_1)
    if t >= 3 and deg_ok and is_triangle_free(h) and delta >= 2:
        fired["corona.triangle_free"] = r * t - 2
    else:
        failed.append("corona.triangle_free: t>=3, triangle-free, Delta>=2, (Delta<=t-2 or r>=2)")
    connected = is_connected(h)
    diam = diameter(bfs_distances(h)) if connected else None
    if connected and diam == 2 and deg_ok:
        fired["corona.diameter_two"] = (r - 1) * t + _dim_s(h)
    elif not connected or (diam is not None and diam > 2):
        fired["corona.diameter_large"] = (r - 1) * t + _dim_s(join_k1(h)[0])
    else:
        failed.append("corona.diameter: diam(H)==2 (with degree condition), >2 or disconnected")
    twins = true_twins(h)
    if r >= 2 and t >= 1:
        if not twins:
            fired["corona.no_twins"] = r * t - clique_number(h)
        else:
            full = universal_vertices(h)
            if all(a in full and b in full for a, b in twins):
                fired["corona.full_degree_twins"] = r * t + len(full) - 1 - clique_number(h)
            else:
                failed.append("corona.twins: twins exist outside full-degree vertices")
    else:
        failed.append("corona.twins: r>=2")
    return fired, failed


def _combine(prefix: str, fired: dict[str, int], checks: list[str]) -> FormulaResult:
    vals = set(fired.values())
    value = vals.pop() if len(vals) == 1 else None
    return FormulaResult(prefix, value, preconditions_verified=checks, branches=dict(fired))


def dim_corona(r: int, h: Graph) -> FormulaResult:
    """dim_s(G ⊙ H) for connected G of order ``r``; all applicable branches are evaluated."""
    _need_order(r, least=1)
    if h.n < 1:
        raise PreconditionError("H must be nonempty", ["order(H)>=1"])
    fired, failed = _corona_branches(r, h)
    if not fired:
        raise PreconditionError("no corona branch applies: " + "; ".join(failed), failed)
    return _combine("corona", fired, sorted(fired))


def dim_universal_root(g: Graph, h: Graph, v: int) -> FormulaResult:
    """Root of full degree: G ∘_v H is G ⊙ (H - v), so the corona branches apply to H - v."""
    r, t = g.n, h.n
    _need_order(r)
    _need_order(t, "H")
    _need_connected(h)
    if h.degree(v) != t - 1:
        raise PreconditionError(f"root {v} has degree {h.degree(v)}, need {t - 1}", ["deg(v)==t-1"])
    hv = h.remove_vertex(v)
    fired, failed = _corona_branches(r, hv)
    # the large-diameter branch reads dim_s(K_1 + (H - v)) = dim_s(H)
    fired = {k.replace("corona.", "universal_root."): val for k, val in fired.items()}
    if not fired:
        raise PreconditionError("no universal-root branch applies: " + "; ".join(failed), failed)
    return _combine("universal_root", fired, ["order(G)>=2", "deg(v)==t-1"] + sorted(fired))


def bounds_general(g: Graph, h: Graph, v: int, budget: int | None = None) -> FormulaResult:
    """Interval for dim_s(G ∘_v H) from basis membership of the root."""
    _need_order(g.n)
    _need_connected(h)
    _need_order(h.n, "H")
    n = g.n
    sr = strong_resolving_graph(h)
    bd = len(sr.boundary)
    ds = strong_dimension(h, budget).value
    if v_in_some_basis(h, v, budget, sr):
        return FormulaResult("bounds.root_in_basis", lower=n * ds - 1, upper=(bd - 1) * (n - 1) + ds - 1,
                             preconditions_verified=["order(G)>=2", "v in some basis"])
    if v in sr.boundary:
        return FormulaResult("bounds.root_not_in_basis.in_boundary", lower=n * ds, upper=(bd - 1) * (n - 1) + ds,
                             preconditions_verified=["order(G)>=2", "v in no basis", "v in boundary"])
    return FormulaResult("bounds.root_not_in_basis.outside_boundary", lower=n * ds, upper=bd * (n - 1) + ds,
                         preconditions_verified=["order(G)>=2", "v in no basis", "v not in boundary"])


def bound_pendant(n: int, h: Graph, v: int, budget: int | None = None) -> FormulaResult:
    """Lower bound when v is off the boundary and some other leaf of H avoids every basis."""
    _need_order(n)
    _need_connected(h)
    _need_order(h.n, "H")
    sr = strong_resolving_graph(h)
    failed = []
    if v in sr.boundary:
        failed.append("v not in boundary")
    witness = next((w for w in sorted(leaves(h)) if w != v and not v_in_some_basis(h, w, budget, sr)), None)
    if witness is None:
        failed.append("leaf w != v in no basis")
    if failed:
        raise PreconditionError("pendant bound does not apply: " + ", ".join(failed), failed)
    ds = strong_dimension(h, budget).value
    return FormulaResult("pendant", lower=n * (ds + 1) - 1,
                         preconditions_verified=["order(G)>=2", "v not in boundary", f"leaf {witness} in no basis"])


def family_F_product_value(n: int, spec: FamilyFSpec, root_choice: str) -> FormulaResult:
    """dim_s(G ∘ H_{t,p,r}) rooted at ``"y"`` or ``"x_t"``."""
    _need_order(n)
    base = spec.dim_s
    if root_choice == "y":
        return FormulaResult("family_F.root_y", n * base, preconditions_verified=["order(G)>=2"])
    if root_choice == "x_t":
        return FormulaResult("family_F.root_x_t", n * (base + 1) - 1, preconditions_verified=["order(G)>=2"])
    raise PreconditionError(f"root_choice must be 'y' or 'x_t', got {root_choice!r}", ["root_choice"])


def family_F_root(spec: FamilyFSpec, root_choice: str) -> tuple[Graph, int]:
    h, marks = family_F(spec)
    return h, marks[root_choice]
