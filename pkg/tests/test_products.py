import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strongdim.cover import strong_dimension
from strongdim.graph_core import (
    Graph,
    GraphError,
    bfs_distances,
    complete,
    components,
    cycle,
    empty,
    parse_graph6,
    path,
    random_connected,
    serialize_graph6,
)
from strongdim.products import (
    FamilyFSpec,
    corona_product,
    family_F,
    join_k1,
    rooted_product,
    rooted_product_sequence,
)
from strongdim.metrics import strong_resolving_graph

from .conftest import connected_graphs, isomorphic


def test_p4_rooted_c3_counts():
    pm = rooted_product(path(4), cycle(3), 0)
    assert pm.product.n == 12 and pm.product.m == 15
    assert serialize_graph6(pm.product) == "K{CW_CB?_?_B"
    assert strong_dimension(pm.product).value == 7


@settings(max_examples=60, deadline=None)
@given(connected_graphs(min_n=1, max_n=7))
def test_rooted_with_k1_is_g(g):
    assert rooted_product(g, Graph(1, []), 0).product == g


def test_distance_identity(rng):
    checked = 0
    for trial in range(10):
        g = random_connected(3 + trial % 4, 0.5, seed=trial)
        h = random_connected(2 + trial % 5, 0.5, seed=100 + trial)
        v = int(rng.integers(h.n))
        pm = rooted_product(g, h, v)
        dp, dg, dh = bfs_distances(pm.product), bfs_distances(g), bfs_distances(h)
        for _ in range(50):
            a, b = (int(z) for z in rng.integers(g.n, size=2))
            x, y = (int(z) for z in rng.integers(h.n, size=2))
            got = dp[pm.pair_to_id(a, x), pm.pair_to_id(b, y)]
            want = dh[x, y] if a == b else dh[x, v] + dg[a, b] + dh[v, y]
            assert got == want
            checked += 1
    assert checked == 500


def test_layout_copy_major():
    pm = rooted_product(path(3), cycle(4), 2)
    for a in range(3):
        assert pm.copy_ids(a) == [4 * a + x for x in range(4)]
        for x in range(4):
            assert pm.id_to_pair(pm.pair_to_id(a, x)) == (a, x)


def test_sequence_specialisation():
    g, h = path(3), cycle(5)
    assert rooted_product_sequence(g, [(h, 1)] * 3).product == rooted_product(g, h, 1).product


def test_sequence_mixed_factors():
    # P_2 with K_1 and K_2: a path on three vertices
    pm = rooted_product_sequence(path(2), [(Graph(1, []), 0), (path(2), 0)])
    assert pm.product.n == 3 and pm.product.m == 2
    assert isomorphic(pm.product, path(3))


@pytest.mark.parametrize("bad", [
    lambda: rooted_product(path(2), cycle(3), 3),
    lambda: rooted_product_sequence(path(3), [(cycle(3), 0)]),
    lambda: rooted_product_sequence(path(2), [(Graph(0, []), 0)] * 2),
])
def test_rooted_errors(bad):
    with pytest.raises(GraphError):
        bad()


def test_join_k1():
    j, apex = join_k1(cycle(4))
    assert apex == 4 and j.n == 5 and j.m == 8 and j.degree(apex) == 4


def test_corona_small():
    assert isomorphic(corona_product(path(2), Graph(1, [])).product, path(4))
    wheel = corona_product(Graph(1, []), cycle(4)).product
    assert wheel.n == 5 and wheel.m == 8
    assert isomorphic(wheel, join_k1(cycle(4))[0])


def test_corona_matches_rooted_join():
    for seed in range(200):
        g = random_connected(1 + seed % 5, 0.5, seed=seed)
        h = random_connected(1 + seed % 4, 0.4, seed=10_000 + seed) if seed % 3 else empty(1 + seed % 3)
        cor = corona_product(g, h)
        j, apex = join_k1(h)
        rooted = rooted_product(g, j, apex)
        assert isomorphic(cor.product, rooted.product)
        # coordinates agree with the rooted layout as well
        for a in range(g.n):
            assert cor.pair_to_id(a, h.n) == a
        for a, b in g.edges:
            assert cor.product.has_edge(cor.pair_to_id(a, h.n), cor.pair_to_id(b, h.n))


def test_product_map_json():
    pm = rooted_product(path(2), cycle(3), 0)
    data = json.loads(pm.to_json())
    assert parse_graph6(data["graph6"]) == pm.product
    assert data["roots"] == [0, 0] and len(data["pairs"]) == 6


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6).map(lambda k: 2 * k + 1), st.integers(1, 3), st.integers(1, 3))
def test_family_counts(t, p, r):
    spec = FamilyFSpec(t, p, r)
    h, marks = family_F(spec)
    assert h.n == spec.order == t + 1 + p + r
    assert h.m == spec.size == t + 2 + p + r
    assert h.labels[marks["y"]] == "y"
    assert h.degree(marks["y"]) == 1 and h.has_edge(marks["y"], marks["x_t"])
    assert h.has_edge(marks["x_1"], marks["x_t-1"])
    assert all(h.degree(w) == 1 for w in marks["W"] + marks["Z"])


@pytest.mark.parametrize("t, p, r", [(5, 1, 1), (7, 2, 1), (9, 1, 3), (11, 2, 2)])
def test_family_sr_structure_and_dimension(t, p, r):
    spec = FamilyFSpec(t, p, r)
    h, _ = family_F(spec)
    g_sr, _ = strong_resolving_graph(h).as_graph()
    comps = [c for c in components(g_sr)]
    sizes = sorted(len(c) for c in comps)
    assert len(comps) == t // 2 - 1
    assert sizes.count(2) == t // 2 - 2
    assert strong_dimension(h).value == spec.dim_s


@pytest.mark.parametrize("t, p, r", [(4, 1, 1), (3, 1, 1), (5, 0, 1), (7, 1, 0)])
def test_family_rejects(t, p, r):
    with pytest.raises(GraphError):
        FamilyFSpec(t, p, r)


def test_corona_distance_from_apex():
    cor = corona_product(cycle(5), complete(3))
    d = bfs_distances(cor.product).d
    for a in range(5):
        for x in range(3):
            assert d[a, cor.pair_to_id(a, x)] == 1
    assert np.max(d) == 2 + 2
