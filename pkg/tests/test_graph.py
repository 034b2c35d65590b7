import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from partseq.families import cycle_graph, directed_cycle, path_graph
from partseq.graph import (
    DegreeTriple,
    Graph,
    GraphError,
    apply_permutation,
    available_degree,
    cycle_notation,
    inverse_code,
    invert_permutation,
    is_automorphism,
)


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    arcs = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_arcs(n, arcs)


@st.composite
def graph_and_perm(draw):
    g = draw(graphs())
    perm = draw(st.permutations(range(g.n)))
    return g, list(perm)


class TestFromArcs:
    def test_single_arc(self):
        g = Graph.from_arcs(2, [(0, 1)])
        assert g.adj[0, 1] == 2 and g.adj[1, 0] == 1

    def test_both_directions(self):
        g = Graph.from_arcs(2, [(0, 1), (1, 0)])
        assert g.adj[0, 1] == 3 and g.adj[1, 0] == 3

    def test_no_arcs(self):
        assert not Graph.from_arcs(3, []).adj.any()

    @pytest.mark.parametrize("arcs", [[(0, 3)], [(-1, 0)], [(1, 1)]])
    def test_rejects_bad_arcs(self, arcs):
        with pytest.raises(GraphError):
            Graph.from_arcs(3, arcs)

    def test_rejects_inconsistent_matrix(self):
        with pytest.raises(GraphError):
            Graph(np.array([[0, 2], [2, 0]]))

    def test_immutable(self):
        g = Graph.from_arcs(2, [(0, 1)])
        with pytest.raises(ValueError):
            g.adj[0, 1] = 0

    @given(graphs())
    def test_invariants(self, g):
        assert not np.diagonal(g.adj).any()
        for u in range(g.n):
            for v in range(g.n):
                assert g.adj[u, v] == inverse_code(g.adj[v, u])

    def test_arcs_round_trip(self):
        g = Graph.from_arcs(4, [(0, 1), (1, 0), (2, 3), (3, 1)])
        assert Graph.from_arcs(4, g.arcs()) == g


def test_inverse_code_is_involution():
    assert [inverse_code(c) for c in range(4)] == [0, 2, 1, 3]
    assert all(inverse_code(inverse_code(c)) == c for c in range(4))


class TestAvailableDegree:
    def test_triangle(self):
        g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
        assert available_degree(g, 0, {1, 2}) == (2, 0, 0)

    def test_empty_reference_set(self):
        assert available_degree(cycle_graph(5), 2, set()) == DegreeTriple(0, 0, 0)

    def test_directed_cycle(self):
        assert available_degree(directed_cycle(3), 0, {1, 2}) == (0, 1, 1)

    def test_self_excluded(self):
        assert available_degree(path_graph(3), 1, {0, 1, 2}) == (2, 0, 0)

    @given(graphs(), st.data())
    def test_additive_over_partition(self, g, data):
        v = data.draw(st.integers(0, g.n - 1))
        labels = data.draw(st.lists(st.integers(0, 2), min_size=g.n, max_size=g.n))
        parts = [[u for u in range(g.n) if labels[u] == k] for k in range(3)]
        total = available_degree(g, v, range(g.n))
        summed = [sum(x) for x in zip(*(available_degree(g, v, p) for p in parts))]
        assert tuple(summed) == tuple(total)


class TestPermutations:
    def test_identity(self):
        g = directed_cycle(4)
        assert apply_permutation(g, range(4)) == g
        assert is_automorphism(g, list(range(4)))

    def test_swap_relabels_arc(self):
        g = Graph.from_arcs(2, [(0, 1)])
        assert apply_permutation(g, [1, 0]) == Graph.from_arcs(2, [(1, 0)])

    def test_c4_rotation(self):
        assert is_automorphism(cycle_graph(4), [1, 2, 3, 0])

    def test_path_swap_is_not_automorphism(self):
        assert not is_automorphism(path_graph(3), [1, 0, 2])

    def test_rejects_non_bijection(self):
        with pytest.raises(GraphError):
            apply_permutation(path_graph(3), [0, 0, 1])

    @given(graph_and_perm())
    def test_inverse_undoes(self, gp):
        g, perm = gp
        assert apply_permutation(apply_permutation(g, perm), invert_permutation(perm)) == g

    @given(graph_and_perm())
    @settings(max_examples=200)
    def test_automorphism_iff_fixed(self, gp):
        g, perm = gp
        assert is_automorphism(g, perm) == (apply_permutation(g, perm) == g)


def test_cycle_notation():
    assert cycle_notation([1, 2, 0, 4, 3]) == "(0 1 2)(3 4)"
    assert cycle_notation([0, 1]) == "()"
