import json

import pytest

from strongdim.cover import strong_dimension, twin_free_clique_number
from strongdim.formulas import (
    PreconditionError,
    bound_pendant,
    bounds_general,
    dim_antipodal,
    dim_corona,
    dim_corona_of_cliques,
    dim_cycle_rooted,
    dim_matching_sr,
    dim_simplicial_boundary,
    dim_universal_root,
    family_F_product_value,
)
from strongdim.graph_core import Graph, complete, cycle, empty, hypercube, parse_graph6, path, random_connected, random_tree, star
from strongdim.metrics import boundary, leaves
from strongdim.products import FamilyFSpec, corona_product, family_F, rooted_product


def solve(g, h, v):
    return strong_dimension(rooted_product(g, h, v).product).value


class TestSimplicialBoundary:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_complete(self, n):
        res = dim_simplicial_boundary(path(n), complete(4), 0)
        assert res.value == 3 * n - 1 == solve(path(n), complete(4), 0)

    def test_trees(self):
        for seed in range(12):
            t = random_tree(3 + seed % 6, seed=seed)
            g = path(2 + seed % 2)
            lv = leaves(t)
            leaf = min(lv)
            assert dim_simplicial_boundary(g, t, leaf).value == g.n * (len(lv) - 1) - 1 == solve(g, t, leaf)
            inner = [x for x in range(t.n) if x not in lv]
            if inner:
                assert dim_simplicial_boundary(g, t, inner[0]).value == g.n * len(lv) - 1 == solve(g, t, inner[0])

    def test_refusal_names_witness(self):
        with pytest.raises(PreconditionError) as info:
            dim_simplicial_boundary(path(2), cycle(5), 0)
        assert "vertex 0" in str(info.value)
        assert info.value.failed == ["boundary==simplicial"]

    @pytest.mark.parametrize("core", [Graph(1, []), path(2), cycle(3)])
    @pytest.mark.parametrize("sizes", [[1, 1], [1, 2], [1, 1, 3]])
    def test_corona_of_cliques(self, core, sizes):
        cliques = Graph(sum(sizes), [(a, b) for a in range(sum(sizes)) for b in range(a + 1, sum(sizes))
                                     if _same_block(sizes, a, b)])
        h = corona_product(core, cliques).product
        # ids below core.n are G' vertices; core.n is the first clique vertex
        for n in (2, 3):
            assert dim_corona_of_cliques(n, core.n, sizes, False).value == solve(path(n), h, 0)
            assert dim_corona_of_cliques(n, core.n, sizes, True).value == solve(path(n), h, core.n)


def _same_block(sizes, a, b):
    edges = [0]
    for s in sizes:
        edges.append(edges[-1] + s)
    block = lambda x: next(i for i in range(len(sizes)) if edges[i] <= x < edges[i + 1])  # noqa: E731
    return block(a) == block(b)


class TestMatching:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_c6_corrected_value(self, n):
        res = dim_matching_sr(path(n), cycle(6), 0)
        assert res.value == 3 * n - 1 == dim_antipodal(n, cycle(6)).value == solve(path(n), cycle(6), 0)

    def test_antipodal_reduction(self):
        for h in (cycle(4), cycle(8), hypercube(3)):
            for n in (2, 3):
                assert dim_matching_sr(path(n), h, 0).value == n * h.n // 2 - 1

    def test_p2(self):
        assert dim_matching_sr(path(2), path(2), 0).value == 1 == solve(path(2), path(2), 0)

    def test_root_outside_boundary(self):
        h = parse_graph6("ElEG")
        assert 0 not in boundary(h)
        for n in (2, 3):
            assert dim_matching_sr(path(n), h, 0).value == solve(path(n), h, 0)

    def test_refusal(self):
        with pytest.raises(PreconditionError):
            dim_matching_sr(path(2), cycle(5), 0)


class TestAntipodalAndCycle:
    @pytest.mark.parametrize("h, n, k", [(cycle(8), 3, 11), (hypercube(3), 2, 7), (path(2), 4, 3)])
    def test_values(self, h, n, k):
        assert dim_antipodal(n, h).value == k
        assert solve(path(n), h, 0) == k

    def test_refusal(self):
        with pytest.raises(PreconditionError):
            dim_antipodal(2, cycle(7))

    @pytest.mark.parametrize("r, t, k", [(4, 3, 7), (2, 5, 5), (3, 4, 5)])
    def test_cycle(self, r, t, k):
        assert dim_cycle_rooted(r, t).value == k == solve(path(r), cycle(t), 0)

    def test_cycle_even_agrees_with_antipodal(self):
        for r in (2, 3, 5):
            for t in (4, 6, 8):
                assert dim_cycle_rooted(r, t).value == dim_antipodal(r, cycle(t)).value


class TestCorona:
    @pytest.mark.parametrize("r, h, k", [(2, path(2), 3), (2, path(3), 4), (3, empty(2), 5)])
    def test_examples(self, r, h, k):
        res = dim_corona(r, h)
        assert res.value == k and res.consistent
        assert strong_dimension(corona_product(path(r), h).product).value == k

    def test_branch_agreement_on_small_h(self):
        for seed in range(30):
            h = random_connected(2 + seed % 5, 0.5, seed=seed)
            for r in (1, 2, 3):
                try:
                    res = dim_corona(r, h)
                except PreconditionError:
                    continue
                assert res.consistent, res.branches
                assert res.value == strong_dimension(corona_product(path(r), h).product).value

    def test_triangle_free_branch_needs_an_edge_of_degree_two(self):
        # verbatim rt-2 is wrong for 3K_1: the product is a tree with 6 leaves
        h = empty(3)
        exact = strong_dimension(corona_product(path(2), h).product).value
        assert exact == 5 != 2 * 3 - 2
        res = dim_corona(2, h)
        assert "corona.triangle_free" not in res.branches
        assert res.value == exact

    def test_refusal_when_nothing_applies(self):
        # r=1 with a universal vertex in a twin-bearing H of diameter two
        h = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
        with pytest.raises(PreconditionError):
            dim_corona(1, h)


class TestUniversalRoot:
    def test_triangle_free(self):
        wheel = _wheel_like()  # H - apex = C_5
        res = dim_universal_root(path(3), wheel, 0)
        assert res.branches["universal_root.triangle_free"] == 3 * 5 - 2
        assert res.value == solve(path(3), wheel, 0)
        assert dim_universal_root(path(2), star(3), 0).value == solve(path(2), star(3), 0)

    def test_k3_twins_agree(self):
        for r in (2, 3, 4):
            res = dim_universal_root(path(r), complete(3), 0)
            assert res.branches["universal_root.full_degree_twins"] == 2 * r - 1
            assert res.branches["universal_root.twin_free_clique"] == 2 * r - 1
            assert res.value == solve(path(r), complete(3), 0)

    def test_large_diameter(self):
        # H - v = P_4 has diameter 3
        h = Graph(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)])
        res = dim_universal_root(path(2), h, 4)
        assert res.branches["universal_root.diameter_large"] == 4 + strong_dimension(h).value
        assert res.value == solve(path(2), h, 4)

    def test_refusal(self):
        with pytest.raises(PreconditionError):
            dim_universal_root(path(2), path(3), 0)


def _wheel_like():
    # K_1 + C_5, apex 0
    return Graph(6, [(0, k) for k in range(1, 6)] + [(k, k % 5 + 1) for k in range(1, 6)])


class TestBounds:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_k3_collapses(self, n):
        res = bounds_general(path(n), complete(3), 0)
        assert res.lower == res.upper == 2 * n - 1 == dim_simplicial_boundary(path(n), complete(3), 0).value

    def test_contains_exact(self):
        for seed in range(40):
            g = random_connected(2 + seed % 3, 0.6, seed=seed)
            h = random_connected(2 + seed % 5, 0.4, seed=500 + seed)
            v = seed % h.n
            res = bounds_general(g, h, v)
            assert res.contains(solve(g, h, v))

    def test_outside_boundary_case(self):
        res = bounds_general(path(2), path(3), 1)
        assert res.case == "bounds.root_not_in_basis.outside_boundary"
        assert res.lower == 2 and res.upper == 2 * 1 + 1

    def test_pendant(self):
        spec = FamilyFSpec(5, 1, 1)
        h, marks = family_F(spec)
        res = bound_pendant(2, h, marks["x_t"])
        assert res.lower == 5 == solve(path(2), h, marks["x_t"])

    def test_pendant_refusal(self):
        with pytest.raises(PreconditionError) as info:
            bound_pendant(2, path(3), 1)
        assert "leaf w != v in no basis" in info.value.failed


class TestFamily:
    @pytest.mark.parametrize("n, t, p, r, choice, k", [
        (2, 9, 3, 4, "y", 18), (2, 5, 1, 1, "x_t", 5), (3, 7, 2, 2, "y", 15),
    ])
    def test_values(self, n, t, p, r, choice, k):
        spec = FamilyFSpec(t, p, r)
        assert family_F_product_value(n, spec, choice).value == k
        if spec.order * n <= 40:
            h, marks = family_F(spec)
            assert solve(path(n), h, marks[choice]) == k

    def test_bad_choice(self):
        with pytest.raises(PreconditionError):
            family_F_product_value(2, FamilyFSpec(5, 1, 1), "w")


def test_result_json():
    res = dim_corona(2, path(3))
    data = json.loads(res.to_json())
    assert data["value"] == 4 and "corona.triangle_free" in data["branches"]
    assert twin_free_clique_number(path(3)) == 2
