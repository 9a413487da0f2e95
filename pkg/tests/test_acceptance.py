"""Acceptance gate: ten criteria, each printing one PASS/FAIL line.

All comparisons are exact integers; there is no tolerance to tune.
"""
import time

import pytest

from strongdim.graph_core import complete, cycle, random_connected, random_tree
from strongdim.harness import conjecture_search, connected_graph_corpus, recheck_counterexample, verify_theorem
from strongdim.metrics import boundary, leaves, simplicial, strong_resolving_graph

from .conftest import isomorphic

pytestmark = pytest.mark.acceptance


@pytest.fixture
def report(capsys):
    def emit(k: int, title: str, ok: bool, detail: str):
        with capsys.disabled():
            print(f"\n[acceptance {k:>2}] {'PASS' if ok else 'FAIL'}  {title}: {detail}")
    return emit


def _run(theorem, grid=None, seed=0, workers=1):
    t0 = time.perf_counter()
    reps = verify_theorem(theorem, grid, seed, workers)
    bad = [r for r in reps if not r.passed]
    return reps, bad, time.perf_counter() - t0


def test_01_oracle_equivalence(report):
    corpus = connected_graph_corpus(7)
    counts = [len(corpus[n]) for n in range(1, 8)]
    reps, bad, secs = _run("oracle", workers=4)
    n_corpus = sum(r.instance["source"] == "corpus" for r in reps)
    n_random = sum(r.instance["source"] == "random" for r in reps)
    ok = counts == [1, 1, 2, 6, 21, 112, 853] and n_corpus == sum(counts[1:]) and n_random == 500 and not bad
    report(1, "oracle equivalence", ok, f"corpus counts {counts}, {n_corpus} corpus + {n_random} random graphs, "
                                        f"{len(bad)} mismatches, {secs:.1f}s")
    assert ok, bad[:3]


def test_02_catalog_values(report):
    reps, bad, secs = _run("catalog")
    kinds = {k: sum(r.instance["kind"] == k for r in reps) for k in ("complete", "cycle", "tree")}
    max_tree = max(r.instance["n"] for r in reps if r.instance["kind"] == "tree")
    ok = kinds == {"complete": 7, "cycle": 10, "tree": 100} and max_tree <= 12 and not bad
    report(2, "catalog values", ok, f"{kinds}, {len(bad)} mismatches, {secs:.1f}s")
    assert ok, bad[:3]


def _sr(g):
    return strong_resolving_graph(g).as_graph()[0]


def test_03_sr_catalog(report):
    failures = []
    for seed in range(60):
        t = random_tree(3 + seed % 10, seed=[3, seed])
        if not isomorphic(_sr(t), complete(len(leaves(t)))):
            failures.append(("tree", seed))
    for k in range(2, 7):
        even = _sr(cycle(2 * k))
        if not (even.n == 2 * k and even.m == k and all(even.degree(v) == 1 for v in range(even.n))):
            failures.append(("even", k))
        if not isomorphic(_sr(cycle(2 * k + 1)), cycle(2 * k + 1)):
            failures.append(("odd", k))
    closed = 0
    for n in range(2, 9):
        if not isomorphic(_sr(complete(n)), complete(n)):
            failures.append(("complete", n))
    for seed in range(400):
        g = random_connected(3 + seed % 6, 0.3 + (seed % 5) / 10, seed=[33, seed])
        bd = boundary(g)
        if bd == simplicial(g):
            closed += 1
            if not isomorphic(_sr(g), complete(len(bd))):
                failures.append(("closed", seed))
    ok = not failures and closed > 0
    report(3, "SR-graph catalog", ok, f"60 trees, cycles k=2..6, K_2..K_8, {closed} random graphs with "
                                      f"boundary == simplicial; {len(failures)} failures")
    assert ok, failures[:5]


def test_04_cycle_theorem(report):
    reps, bad, secs = _run("cycle", "r=2..4,t=3..7")
    biggest = max(r.instance["r"] * r.instance["t"] for r in reps)
    ok = len(reps) == 40 and not bad and biggest <= 28 and secs < 120
    report(4, "rooted cycle formula", ok, f"{len(reps)} products up to {biggest} vertices, "
                                          f"{len(bad)} mismatches, {secs:.1f}s")
    assert ok, bad[:3]


def test_05_antipodal(report):
    reps, bad, secs = _run("antipodal", "h=C4|C6|C8|Q3,g=P2|P3|C5")
    ok = len(reps) == 12 and not bad
    report(5, "2-antipodal formula", ok, f"{len(reps)} products, {len(bad)} mismatches, {secs:.1f}s")
    assert ok, bad[:3]


def test_06_simplicial_boundary(report):
    reps, bad, secs = _run("simplicial")
    cases = sorted({r.note for r in reps})
    hs = sorted({r.instance["h_name"] for r in reps})
    ok = not bad and len(hs) == 5 and cases == ["simplicial_boundary.root_in_boundary",
                                                "simplicial_boundary.root_inner"]
    report(6, "boundary == simplicial formula", ok, f"H in {hs}, {len(reps)} products, both root cases, "
                                                    f"{len(bad)} mismatches, {secs:.1f}s")
    assert ok, bad[:3]


def test_07_family(report):
    reps, bad, secs = _run("family", workers=4)
    standalone = sum(r.instance["root_choice"] is None for r in reps)
    ok = len(reps) == 27 * 5 and standalone == 27 and not bad and secs < 300
    report(7, "family H_{t,p,r} values", ok, f"{len(reps)} checks ({standalone} standalone), "
                                             f"{len(bad)} mismatches, {secs:.1f}s")
    assert ok, bad[:3]


def test_08_bounds_sandwich(report):
    reps, bad, secs = _run("bounds", workers=4)
    lemma_ok = all(r.instance["checks"]["divide_lemma"] for r in reps)
    ok = len(reps) == 200 and not bad and lemma_ok
    report(8, "bounds interval and per-copy lemma", ok, f"{len(reps)} random triples, {len(bad)} outside interval "
                                                        f"or lemma violations, {secs:.1f}s")
    assert ok, bad[:3]


def test_09_corona_agreement(report):
    reps, bad, secs = _run("corona")
    multi = all(len(r.formula["branches"]) >= 2 for r in reps)
    ok = len(reps) == 50 and multi and not bad
    report(9, "corona / universal-root branch agreement", ok,
           f"{len(reps)} instances with >= 2 fired branches, {len(bad)} disagreements, {secs:.1f}s")
    assert ok, bad[:3]


def test_10_conjecture_search(report):
    t0 = time.perf_counter()
    rep = conjecture_search((4, 9), samples=10_000, seed=0, workers=4)
    secs = time.perf_counter() - t0
    again = conjecture_search((4, 9), samples=10_000, seed=0, workers=1)
    failed = [c for c in rep.counterexamples if not recheck_counterexample(c)]
    ok = rep.samples == 10_000 and rep.to_jsonl() == again.to_jsonl() and not failed
    report(10, "conjecture search", ok, f"{rep.samples} samples, {rep.examined_roots} roots examined, "
                                        f"{len(rep.counterexamples)} findings preserved, {len(failed)} reproducer "
                                        f"failures, rerun identical={rep.to_jsonl() == again.to_jsonl()}, {secs:.1f}s")
    assert ok
