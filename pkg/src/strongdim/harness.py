"""Independent oracles and verification runs.

The brute-force oracle works straight from the definition of "strongly
resolves" on Floyd-Warshall distances; it never builds an SR graph or
solves a cover.  ``verify_theorem`` builds products over a seeded grid and
compares formula, reduction solver and (for small products) the oracle.
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations

import networkx as nx
import numpy as np

from . import formulas as F
from .cover import BudgetExceeded, DimReport, strong_dimension, v_in_some_basis
from .graph_core import (
    Graph,
    GraphError,
    bfs_distances,
    complete,
    cycle,
    hypercube,
    parse_graph6,
    path,
    random_connected,
    random_tree,
    serialize_graph6,
    star,
)
from .metrics import (
    boundary,
    is_tree,
    leaves,
    max_distant_set,
    root_context,
    simplicial,
    sr_is_perfect_matching,
    strong_resolving_graph,
)
from .products import FamilyFSpec, corona_product, family_F, join_k1, rooted_product

__all__ = [
    "VerifyReport",
    "ConjectureReport",
    "THEOREMS",
    "to_networkx",
    "floyd_warshall",
    "strongly_resolves",
    "is_strong_resolving_set",
    "oracle_strong_dimension",
    "connected_graph_corpus",
    "parse_grid",
    "instances",
    "run_instance",
    "verify_theorem",
    "check_divide_lemma",
    "conjecture_search",
    "recheck_counterexample",
    "summary_table",
]


def to_networkx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges)
    return out


def floyd_warshall(g: Graph) -> np.ndarray:
    n = g.n
    inf = n + 1
    d = np.full((n, n), inf, dtype=np.int64)
    np.fill_diagonal(d, 0)
    for u, v in g.edges:
        d[u, v] = d[v, u] = 1
    for k in range(n):
        d = np.minimum(d, d[:, k:k + 1] + d[k:k + 1, :])
    if n and d.max() >= inf:
        u, v = map(int, np.argwhere(d >= inf)[0])
        raise GraphError(f"graph is disconnected: no path between {u} and {v}")
    return d


def strongly_resolves(d, w: int, u: int, v: int) -> bool:
    return d[w][u] == d[w][v] + d[v][u] or d[w][v] == d[w][u] + d[u][v]


def _resolver_masks(d: np.ndarray) -> list[int]:
    """For each vertex pair, the bitmask of vertices strongly resolving it (deduplicated)."""
    n = d.shape[0]
    weights = 1 << np.arange(n, dtype=object)
    masks = set()
    for u, v in combinations(range(n), 2):
        hit = (d[:, u] == d[:, v] + d[v, u]) | (d[:, v] == d[:, u] + d[u, v])
        masks.add(int(weights[hit].sum()))
    return sorted(masks)


def is_strong_resolving_set(g: Graph, S, d: np.ndarray | None = None) -> bool:
    d = floyd_warshall(g) if d is None else d
    S = list(S)
    return all(any(strongly_resolves(d, w, u, v) for w in S) for u, v in combinations(range(g.n), 2))


def oracle_strong_dimension(g: Graph, max_n: int = 12) -> DimReport:
    """dim_s by subset enumeration in increasing size.

    Within each size, subsets of the boundary are tried first; the remaining
    subsets of that size are still tried, so a wrong boundary can only change
    which basis is reported, never the value.
    """
    if g.n > max_n:
        raise BudgetExceeded(max_n)
    if g.n < 2:
        raise GraphError("strong metric dimension needs at least two vertices")
    t0 = time.perf_counter()
    d = floyd_warshall(g)
    masks = _resolver_masks(d)
    bd = sorted(boundary(g, bfs_distances(g)))
    bd_mask = sum(1 << v for v in bd)
    checked = 0
    for k in range(g.n + 1):
        for combo in combinations(bd, k):
            checked += 1
            s = sum(1 << v for v in combo)
            if all(m & s for m in masks):
                return DimReport(k, frozenset(combo), "oracle", (time.perf_counter() - t0) * 1e3, checked)
        for combo in combinations(range(g.n), k):
            s = sum(1 << v for v in combo)
            if s & ~bd_mask == 0:
                continue
            checked += 1
            if all(m & s for m in masks):
                return DimReport(k, frozenset(combo), "oracle", (time.perf_counter() - t0) * 1e3, checked)
    raise AssertionError("the full vertex set always resolves")  # pragma: no cover


# ------------------------------------------------------- exhaustive corpus

def connected_graph_corpus(max_n: int) -> dict[int, list[Graph]]:
    """All connected graphs on 1..max_n vertices up to isomorphism.

    Every connected graph on n vertices has a vertex whose removal leaves it
    connected, so adding one vertex with every nonempty neighbour set to each
    connected (n-1)-vertex graph reaches all of them; duplicates are removed
    by isomorphism testing inside Weisfeiler-Lehman hash buckets.
    """
    out = {1: [Graph(1)]}
    for n in range(2, max_n + 1):
        buckets: dict[tuple, list[nx.Graph]] = {}
        keep: list[Graph] = []
        for base in out[n - 1]:
            for nb in range(1, 1 << (n - 1)):
                edges = list(base.edges) + [(v, n - 1) for v in range(n - 1) if nb >> v & 1]
                cand = Graph(n, edges)
                ng = to_networkx(cand)
                key = (tuple(sorted(d for _, d in ng.degree())), nx.weisfeiler_lehman_graph_hash(ng, iterations=3))
                bucket = buckets.setdefault(key, [])
                if any(nx.vf2pp_is_isomorphic(ng, other) for other in bucket):
                    continue
                bucket.append(ng)
                keep.append(cand)
        out[n] = keep
    return out


# ------------------------------------------------------------ reports

@dataclass
class VerifyReport:
    theorem: str
    instance: dict
    formula: object
    solver: int | None
    oracle: int | None = None
    passed: bool = False
    elapsed_ms: float = 0.0
    note: str = ""
    seed: int | None = None

    def recompute(self) -> bool:
        """Pass/fail derived from the stored numbers alone."""
        if self.solver is None:
            return False
        f = self.formula
        if isinstance(f, dict):
            branches = f.get("branches") or {}
            if branches and len(set(branches.values())) != 1:
                return False
            if f.get("value") is not None:
                ok = f["value"] == self.solver
            else:
                lo, hi = f.get("lower"), f.get("upper")
                ok = (lo is None or lo <= self.solver) and (hi is None or self.solver <= hi)
        elif isinstance(f, (list, tuple)):
            lo, hi = f
            ok = (lo is None or lo <= self.solver) and (hi is None or self.solver <= hi)
        else:
            ok = f == self.solver
        if self.oracle is not None:
            ok = ok and self.oracle == self.solver
        extra = self.instance.get("checks")
        if extra:
            ok = ok and all(extra.values())
        return ok

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> "VerifyReport":
        rep = cls(**json.loads(line))
        rep.passed = rep.recompute()
        return rep


def _g6(g: Graph) -> str:
    return serialize_graph6(g)


def parse_grid(text: str | None) -> dict[str, list]:
    """``"r=2..4,t=3..7,h=C4|C6"`` -> ``{"r": [2, 3, 4], "t": [3..7], "h": ["C4", "C6"]}``."""
    grid: dict[str, list] = {}
    if not text:
        return grid
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise ValueError(f"bad grid item {part!r}; expected key=value")
        key, val = (s.strip() for s in part.split("=", 1))
        if ".." in val:
            lo, hi = val.split("..")
            grid[key] = list(range(int(lo), int(hi) + 1))
        else:
            items = val.split("|")
            grid[key] = [int(x) if x.lstrip("-").isdigit() else x for x in items]
    return grid


def _named(name: str) -> Graph:
    kind, num = name[0].upper(), name[1:]
    if name.upper().startswith("K1,"):
        return star(int(name.split(",")[1]))
    k = int(num)
    return {"C": cycle, "K": complete, "P": path, "Q": hypercube}[kind](k)


# ------------------------------------------------------ instance grids

def _rng(seed: int, *salt: int) -> np.random.Generator:
    return np.random.default_rng([seed, *salt])


def _inst_cycle(grid, seed):
    out = []
    for r in grid.get("r", [2, 3, 4]):
        for t in grid.get("t", list(range(3, 8))):
            gs = [("P", path(r))]
            if r >= 3:
                gs.append(("C", cycle(r)))
            gs.append(("rand", random_connected(r, 0.5, seed=[seed, r, t])))
            for tag, g in gs:
                out.append({"g": _g6(g), "h": _g6(cycle(t)), "root": 0, "r": r, "t": t, "g_kind": tag})
    return out


def _inst_antipodal(grid, seed):
    hs = grid.get("h", ["C4", "C6", "C8", "Q3"])
    gs = grid.get("g", ["P2", "P3", "C5"])
    return [{"g": _g6(_named(a)), "h": _g6(_named(b)), "root": 0, "g_name": a, "h_name": b} for b in hs for a in gs]


def _inst_simplicial(grid, seed):
    hs = [("K3", complete(3)), ("K4", complete(4)), ("K1,3", star(3))]
    for k in range(int(grid.get("trees", [2])[0])):
        n = int(_rng(seed, 7, k).integers(5, 9))
        hs.append((f"tree{k}", random_tree(n, seed=[seed, 8, k])))
    gs = grid.get("g", ["P2", "P3", "C4"])
    out = []
    for name, h in hs:
        bd = sorted(boundary(h))
        roots = [bd[0]]
        inner = sorted(set(range(h.n)) - set(bd))
        if inner:
            roots.append(inner[0])
        for v in roots:
            for a in gs:
                out.append({"g": _g6(_named(a)), "h": _g6(h), "root": v, "h_name": name, "g_name": a})
    return out


def _inst_family(grid, seed):
    out = []
    for t in grid.get("t", [5, 7, 9]):
        for p in grid.get("p", [1, 2, 3]):
            for r in grid.get("r", [1, 2, 3]):
                out.append({"t": t, "p": p, "r": r, "root_choice": None, "g": None})
                for a in grid.get("g", ["P2", "P3"]):
                    for rc in ("y", "x_t"):
                        out.append({"t": t, "p": p, "r": r, "root_choice": rc, "g": _g6(_named(a)), "g_name": a})
    return out


def _random_pair(rng, gmax, hmax, seed, k):
    n = int(rng.integers(2, gmax + 1))
    m = int(rng.integers(2, hmax + 1))
    g = random_connected(n, float(rng.uniform(0.3, 0.9)), seed=[seed, 1, k])
    h = random_connected(m, float(rng.uniform(0.2, 0.8)), seed=[seed, 2, k])
    return g, h


def _inst_bounds(grid, seed):
    samples = int(grid.get("samples", [200])[0])
    gmax = int(grid.get("gmax", [4])[0])
    hmax = int(grid.get("hmax", [7])[0])
    out = []
    for k in range(samples):
        rng = _rng(seed, 3, k)
        g, h = _random_pair(rng, gmax, hmax, seed, k)
        v = int(rng.integers(h.n))
        out.append({"g": _g6(g), "h": _g6(h), "root": v})
    return out


def _inst_matching(grid, seed):
    out = []
    hs = [_named(x) for x in ("C4", "C6", "C8", "Q3")]
    hs.append(parse_graph6("ElEG"))  # C_6 plus a long chord; has roots outside the boundary
    samples = int(grid.get("samples", [300])[0])
    for k in range(samples):
        rng = _rng(seed, 4, k)
        h = random_connected(int(rng.integers(4, 9)), float(rng.uniform(0.2, 0.8)), seed=[seed, 5, k])
        if sr_is_perfect_matching(strong_resolving_graph(h)):
            hs.append(h)
    for h in hs:
        for v in range(h.n):
            for a in grid.get("g", ["P2", "P3"]):
                out.append({"g": _g6(_named(a)), "h": _g6(h), "root": v, "g_name": a})
    return out


def _inst_pendant(grid, seed):
    out = []
    for t, p, r in [(5, 1, 1), (5, 2, 1), (7, 1, 2)]:
        h, marks = family_F(FamilyFSpec(t, p, r))
        for a in grid.get("g", ["P2", "P3"]):
            out.append({"g": _g6(_named(a)), "h": _g6(h), "root": marks["x_t"], "family": [t, p, r]})
    samples = int(grid.get("samples", [400])[0])
    for k in range(samples):
        rng = _rng(seed, 6, k)
        g, h = _random_pair(rng, 3, 8, seed, 100 + k)
        sr = strong_resolving_graph(h)
        lv = leaves(h)
        for v in range(h.n):
            if v in sr.boundary:
                continue
            if any(w != v and not v_in_some_basis(h, w, sr=sr) for w in lv):
                out.append({"g": _g6(g), "h": _g6(h), "root": v})
                break
    return out


def _inst_corona(grid, seed):
    want = int(grid.get("samples", [50])[0])
    out = []
    k = 0
    while len(out) < want and k < 50 * want:
        rng = _rng(seed, 9, k)
        r = int(rng.integers(2, 4))
        t = int(rng.integers(1, 6))
        h = random_connected(t, 0.5, seed=[seed, 10, k]) if rng.random() < 0.5 else _random_any(t, rng)
        g = random_connected(r, 0.6, seed=[seed, 11, k])
        k += 1
        if len(out) % 2 == 0:
            try:
                res = F.dim_corona(r, h)
            except F.PreconditionError:
                continue
            if len(res.branches) >= 2:
                out.append({"kind": "corona", "g": _g6(g), "h": _g6(h)})
        else:
            H, apex = join_k1(h)
            try:
                res = F.dim_universal_root(g, H, apex)
            except F.PreconditionError:
                continue
            if len(res.branches) >= 2:
                out.append({"kind": "universal", "g": _g6(g), "h": _g6(H), "root": apex})
    return out


def _random_any(n: int, rng) -> Graph:
    p = float(rng.uniform(0.1, 0.9))
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def _inst_boundary(grid, seed):
    samples = int(grid.get("samples", [150])[0])
    out = []
    for k in range(samples):
        rng = _rng(seed, 12, k)
        g, h = _random_pair(rng, 4, 7, seed, 200 + k)
        out.append({"g": _g6(g), "h": _g6(h), "root": int(rng.integers(h.n))})
    return out


def _inst_catalog(grid, seed):
    out = [{"kind": "complete", "n": n} for n in range(2, 9)]
    out += [{"kind": "cycle", "n": n} for n in range(3, 13)]
    trees = int(grid.get("trees", [100])[0])
    for k in range(trees):
        n = int(_rng(seed, 13, k).integers(2, 13))
        out.append({"kind": "tree", "n": n, "g": _g6(random_tree(n, seed=[seed, 14, k]))})
    return out


def _inst_oracle(grid, seed):
    max_n = int(grid.get("max_n", [7])[0])
    samples = int(grid.get("samples", [500])[0])
    out = []
    for n, gs in connected_graph_corpus(max_n).items():
        if n >= 2:
            out.extend({"g": _g6(g), "source": "corpus"} for g in gs)
    for k in range(samples):
        rng = _rng(seed, 15, k)
        n = int(rng.integers(8, 11))
        g = random_connected(n, float(rng.uniform(0.15, 0.7)), seed=[seed, 16, k])
        out.append({"g": _g6(g), "source": "random"})
    return out


# --------------------------------------------------------- running

def _product(inst) -> tuple[Graph, Graph, int, Graph, object]:
    g = parse_graph6(inst["g"])
    h = parse_graph6(inst["h"])
    v = inst["root"]
    pm = rooted_product(g, h, v)
    return g, h, v, pm.product, pm


def _maybe_oracle(prod: Graph, oracle_budget: int) -> int | None:
    if prod.n <= oracle_budget:
        return oracle_strong_dimension(prod, oracle_budget).value
    return None


def run_instance(theorem: str, inst: dict, oracle_budget: int = 10, seed: int | None = None) -> VerifyReport:
    t0 = time.perf_counter()
    inst = dict(inst)
    formula: object = None
    solver = oracle = None
    note = ""
    try:
        if theorem == "cycle":
            g, h, v, prod, _ = _product(inst)
            formula = F.dim_cycle_rooted(g.n, h.n).value
            solver = strong_dimension(prod).value
            oracle = _maybe_oracle(prod, oracle_budget)
        elif theorem == "antipodal":
            g, h, v, prod, _ = _product(inst)
            formula = F.dim_antipodal(g.n, h).value
            solver = strong_dimension(prod).value
            oracle = _maybe_oracle(prod, oracle_budget)
        elif theorem == "simplicial":
            g, h, v, prod, _ = _product(inst)
            res = F.dim_simplicial_boundary(g, h, v)
            formula, note = res.value, res.case
            if is_tree(h):
                nl = len(leaves(h))
                tree_val = g.n * (nl - 1) - 1 if v in leaves(h) else g.n * nl - 1
                inst["checks"] = {"tree_formula_agrees": tree_val == res.value}
            solver = strong_dimension(prod).value
            oracle = _maybe_oracle(prod, oracle_budget)
        elif theorem == "matching":
            g, h, v, prod, _ = _product(inst)
            res = F.dim_matching_sr(g, h, v)
            formula, note = res.value, res.case
            solver = strong_dimension(prod).value
            oracle = _maybe_oracle(prod, oracle_budget)
        elif theorem == "family":
            spec = FamilyFSpec(inst["t"], inst["p"], inst["r"])
            h, marks = family_F(spec)
            if inst["root_choice"] is None:
                formula, note = spec.dim_s, "family_F.standalone"
                solver = strong_dimension(h).value
                inst["checks"] = {"y_in_no_basis": not v_in_some_basis(h, marks["y"])}
            else:
                g = parse_graph6(inst["g"])
                res = F.family_F_product_value(g.n, spec, inst["root_choice"])
                formula, note = res.value, res.case
                solver = strong_dimension(rooted_product(g, h, marks[inst["root_choice"]]).product).value
        elif theorem == "bounds":
            g, h, v, prod, _ = _product(inst)
            res = F.bounds_general(g, h, v)
            formula, note = [res.lower, res.upper], res.case
            rep = strong_dimension(prod)
            solver = rep.value
            lemma = check_divide_lemma(g, h, v, rep)
            inst["checks"] = {"divide_lemma": all(c["ok"] for c in lemma)}
        elif theorem == "pendant":
            g, h, v, prod, _ = _product(inst)
            res = F.bound_pendant(g.n, h, v)
            formula, note = [res.lower, None], res.case
            solver = strong_dimension(prod).value
        elif theorem == "corona":
            g = parse_graph6(inst["g"])
            h = parse_graph6(inst["h"])
            if inst["kind"] == "corona":
                res = F.dim_corona(g.n, h)
                prod = corona_product(g, h).product
            else:
                res = F.dim_universal_root(g, h, inst["root"])
                prod = rooted_product(g, h, inst["root"]).product
            formula = res.to_dict()
            note = ",".join(sorted(res.branches))
            solver = strong_dimension(prod).value
        elif theorem == "boundary":
            g, h, v, prod, pm = _product(inst)
            bd_h, sg_h = boundary(h), simplicial(h)
            exp_bd = {pm.pair_to_id(a, x) for a in range(g.n) for x in bd_h - {v}}
            exp_sg = {pm.pair_to_id(a, x) for a in range(g.n) for x in sg_h - {v}}
            rep = strong_dimension(prod)
            inst["checks"] = {
                "boundary": boundary(prod) == exp_bd,
                "simplicial": simplicial(prod) == exp_sg,
                "sigma_lower_bound": rep.value >= len(exp_sg) - 1,
            }
            formula = solver = rep.value
        elif theorem == "catalog":
            kind, n = inst["kind"], inst["n"]
            if kind == "complete":
                g, formula = complete(n), n - 1
            elif kind == "cycle":
                g, formula = cycle(n), (n + 1) // 2
            else:
                g = parse_graph6(inst["g"])
                formula = len(leaves(g)) - 1
            solver = strong_dimension(g).value
            oracle = _maybe_oracle(g, oracle_budget)
        elif theorem == "oracle":
            g = parse_graph6(inst["g"])
            rep = strong_dimension(g)
            orc = oracle_strong_dimension(g, max(12, oracle_budget))
            formula, solver, oracle = orc.value, rep.value, orc.value
            inst["checks"] = {
                "solver_basis_resolves": is_strong_resolving_set(g, rep.basis),
                "oracle_basis_resolves": is_strong_resolving_set(g, orc.basis),
            }
        else:
            raise ValueError(f"unknown theorem {theorem!r}")
    except (F.PreconditionError, BudgetExceeded) as exc:
        note = f"{type(exc).__name__}: {exc}"
    rep = VerifyReport(theorem, inst, formula, solver, oracle, False, (time.perf_counter() - t0) * 1e3, note, seed)
    rep.passed = rep.recompute()
    return rep


THEOREMS = {
    "cycle": _inst_cycle,
    "antipodal": _inst_antipodal,
    "simplicial": _inst_simplicial,
    "matching": _inst_matching,
    "family": _inst_family,
    "bounds": _inst_bounds,
    "pendant": _inst_pendant,
    "corona": _inst_corona,
    "boundary": _inst_boundary,
    "catalog": _inst_catalog,
    "oracle": _inst_oracle,
}


def instances(theorem: str, grid: dict | str | None = None, seed: int = 0) -> list[dict]:
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {sorted(THEOREMS)}")
    if not isinstance(grid, dict):
        grid = parse_grid(grid)
    return THEOREMS[theorem](grid, seed)


def _run_star(args):
    return run_instance(*args)


def verify_theorem(theorem: str, grid: dict | str | None = None, seed: int = 0, workers: int = 1,
                   oracle_budget: int = 10) -> list[VerifyReport]:
    """Build every grid instance, evaluate formula/solver/oracle, return reports in instance order."""
    items = [(theorem, inst, oracle_budget, seed) for inst in instances(theorem, grid, seed)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            return list(ex.map(_run_star, items, chunksize=8))
    return [run_instance(*it) for it in items]


def check_divide_lemma(g: Graph, h: Graph, v: int, report: DimReport) -> list[dict]:
    """Per-copy basis counts against dim_s(H)-1, and dim_s(H) in the two stronger cases."""
    ds = strong_dimension(h).value
    M = max_distant_set(h, v)
    v_free = not v_in_some_basis(h, v)
    t = h.n
    out = []
    for a in range(g.n):
        bx = {pid - a * t for pid in report.basis if a * t <= pid < (a + 1) * t}
        size = len(bx)
        covers_m = M <= bx
        ok = size >= ds - 1
        if covers_m or v_free:
            ok = ok and size >= ds
        out.append({"copy": a, "size": size, "covers_M": covers_m, "v_in_no_basis": v_free,
                    "dim_s_H": ds, "ok": ok})
    return out


# ------------------------------------------------------ conjecture

@dataclass
class ConjectureReport:
    seed: int
    orders: tuple[int, int]
    samples: int
    restricted: bool
    filtered: dict[str, int] = field(default_factory=dict)
    examined_roots: int = 0
    counterexamples: list[dict] = field(default_factory=list)

    def to_jsonl(self) -> str:
        head = {k: v for k, v in asdict(self).items() if k != "counterexamples"}
        head["type"] = "summary"
        head["n_counterexamples"] = len(self.counterexamples)
        lines = [json.dumps(head, sort_keys=True)]
        lines += [json.dumps({"type": "counterexample", **c}, sort_keys=True) for c in self.counterexamples]
        return "\n".join(lines) + "\n"


def _conj_entry(h: Graph, v: int, ctx, sample: int, sample_seed) -> dict:
    return {
        "graph6": _g6(h),
        "root": v,
        "M": sorted(ctx.M),
        "i": sorted(ctx.i),
        "i_prime": sorted(ctx.i_prime),
        "canonical": ctx.canonical,
        "sample": sample,
        "sample_seed": list(sample_seed),
    }


def _conj_chunk(args) -> tuple[dict, int, list[dict]]:
    seed, lo, hi, restricted, ks = args
    filt = {"sr_not_matching": 0, "no_root_outside_boundary": 0}
    examined = 0
    found = []
    for k in ks:
        rng = _rng(seed, 17, k)
        n = int(rng.integers(lo, hi + 1))
        p = float(rng.uniform(0.15, 0.85))
        sample_seed = (seed, 18, k)
        h = random_connected(n, p, seed=list(sample_seed))
        dist = bfs_distances(h)
        sr = strong_resolving_graph(h, dist)
        if restricted and not sr_is_perfect_matching(sr):
            filt["sr_not_matching"] += 1
            continue
        outside = [v for v in range(n) if v not in sr.boundary]
        if not outside:
            filt["no_root_outside_boundary"] += 1
            continue
        for v in outside:
            examined += 1
            ctx = root_context(h, v, dist, sr)
            if ctx.i or (restricted and ctx.i_prime):
                entry = _conj_entry(h, v, ctx, k, sample_seed)
                entry["p"] = p
                entry["n"] = n
                found.append(entry)
    return filt, examined, found


def conjecture_search(orders: tuple[int, int] = (4, 9), samples: int = 10_000, seed: int = 0,
                      restricted: bool = True, workers: int = 1) -> ConjectureReport:
    """Look for roots outside the boundary with nonempty i(v) or i'(v).

    Restricted mode keeps only graphs whose SR graph is a perfect matching;
    unrestricted mode records i(v) for every graph.  Sample ``k`` depends only
    on ``(seed, k)``, so the report does not depend on ``workers``.
    """
    lo, hi = orders
    if not 1 <= lo <= hi:
        raise ValueError(f"bad order range {orders}")
    rep = ConjectureReport(seed, (lo, hi), samples, restricted)
    step = max(1, -(-samples // max(1, workers * 4)))
    chunks = [(seed, lo, hi, restricted, range(a, min(samples, a + step))) for a in range(0, samples, step)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_conj_chunk, chunks))
    else:
        parts = [_conj_chunk(c) for c in chunks]
    filt = {"sr_not_matching": 0, "no_root_outside_boundary": 0}
    for f, examined, found in parts:
        for key, val in f.items():
            filt[key] += val
        rep.examined_roots += examined
        rep.counterexamples.extend(found)
    rep.filtered = filt
    return rep


def recheck_counterexample(entry: dict) -> bool:
    """Rebuild a reported instance from its graph6 and from its seed; both must reproduce it."""
    h = parse_graph6(entry["graph6"])
    if "n" in entry and "p" in entry:
        again = random_connected(entry["n"], entry["p"], seed=list(entry["sample_seed"]))
        if again != h:
            return False
    v = entry["root"]
    sr = strong_resolving_graph(h)
    ctx = root_context(h, v, sr=sr)
    return (
        v not in sr.boundary
        and sorted(ctx.M) == entry["M"]
        and sorted(ctx.i) == entry["i"]
        and sorted(ctx.i_prime) == entry["i_prime"]
        and bool(ctx.i or ctx.i_prime)
    )


def summary_table(reports: list[VerifyReport]) -> str:
    by: dict[str, list[VerifyReport]] = {}
    for r in reports:
        by.setdefault(r.theorem, []).append(r)
    rows = [f"{'theorem':<12} {'instances':>9} {'passed':>7} {'failed':>7} {'oracle':>7} {'ms':>10}"]
    for name, rs in by.items():
        npass = sum(r.passed for r in rs)
        rows.append(
            f"{name:<12} {len(rs):>9} {npass:>7} {len(rs) - npass:>7} "
            f"{sum(r.oracle is not None for r in rs):>7} {sum(r.elapsed_ms for r in rs):>10.1f}"
        )
    return "\n".join(rows)
