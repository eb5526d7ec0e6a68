import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import (
    example_tree,
    g_double_prime,
    g_prime,
    k4_example,
    random_clique,
    seeded,
    triangle,
    trees,
)
from wpi import (
    NoCharacterizationError,
    WeightedGraph,
    build_path_ideal,
    clique3_cm,
    clique_mixedness_shortcut,
    cm_auto,
    cm_clique_r2,
    cm_tree,
    is_unmixed,
    krull_dimension_of_quotient,
)


def five_cycle():
    return WeightedGraph.from_edges(5, [(1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1), (1, 5, 1)])


class TestClique3:
    @pytest.mark.parametrize("ws,expected", [
        ((2, 2, 5), True), ((3, 3, 3), True), ((1, 2, 3), False), ((5, 2, 2), True), ((1, 2, 2), False)])
    def test_values(self, ws, expected):
        assert clique3_cm(*ws) is expected

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            clique3_cm(0, 1, 1)


class TestTree:
    @pytest.mark.parametrize("r", range(1, 8))
    def test_example_tree(self, r):
        assert cm_tree(example_tree(), r).is_cm is (r not in (2, 3))

    def test_kinds(self):
        assert cm_tree(example_tree(), 2).kind == "no-suspension"
        assert cm_tree(example_tree(), 7).kind == "trivial-no-paths"
        v = cm_tree(example_tree(), 4)
        assert v.is_cm and v.kind == "suspension" and v.detail["pruned"] == [6]

    def test_inequality_witness(self):
        # 1-suspension of the edge 1-2 with the base edge heavier than a whisker
        g = WeightedGraph.from_edges(4, [(1, 2, 3), (1, 3, 2), (2, 4, 5)])
        v = cm_tree(g, 1)
        assert not v.is_cm and v.kind == "weight-inequality-violated"
        assert v.detail["edge"] == [1, 2] and v.detail["bound"] == 2
        assert not is_unmixed(g, "max", 1)

    @pytest.mark.parametrize("r", range(1, 9))
    def test_g_prime(self, r):
        assert cm_auto(g_prime(), r).is_cm is (r >= 6)

    @pytest.mark.parametrize("r", range(1, 9))
    def test_g_double_prime(self, r):
        assert cm_auto(g_double_prime(), r).is_cm is (r not in (1, 3, 4, 5, 6, 7))

    def test_rejects_non_tree(self):
        with pytest.raises(ValueError):
            cm_tree(five_cycle(), 1)

    @settings(max_examples=80, deadline=None)
    @given(trees(nmax=7), st.integers(1, 3))
    def test_matches_unmixedness(self, g, r):
        assert cm_tree(g, r).is_cm == is_unmixed(g, "max", r)

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_built_suspension_is_cm(self, data):
        # random base tree, each vertex gets an r-whisker whose first edge is
        # at least as heavy as every base edge at that vertex
        r = data.draw(st.integers(1, 2))
        k = data.draw(st.integers(1, 3))
        base = [(data.draw(st.integers(1, j - 1)), j, data.draw(st.integers(1, 3))) for j in range(2, k + 1)]
        heaviest = {v: max([w for i, j, w in base if v in (i, j)], default=1) for v in range(1, k + 1)}
        edges, nxt = list(base), k + 1
        for v in range(1, k + 1):
            prev = v
            for step in range(r):
                w = heaviest[v] + data.draw(st.integers(0, 2)) if step == 0 else data.draw(st.integers(1, 3))
                edges.append((prev, nxt, w))
                prev, nxt = nxt, nxt + 1
        g = WeightedGraph.from_edges(nxt - 1, edges)
        v = cm_tree(g, r)
        assert v.is_cm
        assert is_unmixed(g, "max", r)


class TestClique:
    def test_k4(self):
        v = cm_clique_r2(k4_example())
        assert not v.is_cm and v.detail["triple"] == [1, 2, 3]
        assert v.describe() == "not Cohen-Macaulay; witness triple (1,2,3)"

    def test_k4_unmixed_but_not_cm(self):
        assert is_unmixed(k4_example(), "max", 2) and not cm_auto(k4_example(), 2).is_cm

    def test_constant(self):
        g = random_clique(seeded(1), 5, 1).with_weights(4)
        assert cm_clique_r2(g).is_cm

    def test_triangle_123(self):
        assert not cm_clique_r2(triangle(1, 2, 3)).is_cm

    def test_needs_clique(self):
        with pytest.raises(ValueError):
            cm_clique_r2(example_tree())

    def test_shortcut(self):
        g = WeightedGraph.from_edges(4, [(1, 2, 1), (1, 3, 3), (2, 3, 2), (1, 4, 1), (2, 4, 1), (3, 4, 1)])
        assert clique_mixedness_shortcut(g) == (1, 2, 3)
        assert not is_unmixed(g, "max", 2)
        assert clique_mixedness_shortcut(k4_example()) is None
        assert clique_mixedness_shortcut(random_clique(seeded(2), 4, 1)) is None

    def test_cm_implies_unmixed_on_cliques(self):
        rng = seeded(11)
        for _ in range(30):
            g = random_clique(rng, rng.randint(3, 5), 3)
            if cm_clique_r2(g).is_cm:
                assert is_unmixed(g, "max", 2)
            if clique_mixedness_shortcut(g) is not None:
                assert not is_unmixed(g, "max", 2)

    def test_dimension_is_r(self):
        rng = seeded(5)
        for _ in range(15):
            n = rng.randint(3, 5)
            g = random_clique(rng, n, 3)
            for r in range(1, n):
                assert krull_dimension_of_quotient(build_path_ideal(g, "max", r)) == r


class TestAuto:
    def test_cycle_refused(self):
        with pytest.raises(NoCharacterizationError, match="no characterization available"):
            cm_auto(five_cycle(), 2)

    def test_clique_r3_refused(self):
        with pytest.raises(NoCharacterizationError):
            cm_auto(k4_example(), 3)

    def test_json(self):
        out = cm_auto(k4_example(), 2).to_json()
        assert out == {"cohen_macaulay": False,
                       "witness": {"kind": "failing-3-clique", "triple": [1, 2, 3], "weights": [2, 2, 1]}}
