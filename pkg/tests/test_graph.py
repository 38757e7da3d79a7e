"""
Graph core: construction, distances and intervals.

Distances and intervals are checked against networkx on random connected graphs.
"""
import networkx as nx
import pytest
from hypothesis import given, settings

from src.errors import ArgumentError, CapacityError, DomainError
from src.models.graph import (
    Graph,
    VertexSet,
    all_pairs_distances,
    cartesian_product,
    interval,
    is_connected,
    make_complete,
    make_cycle,
    make_path,
    make_prism,
    make_star,
    make_wheel,
    mask_of,
    members,
)
from strategies import connected_graphs


class TestConstruction:
    def test_from_edges_is_symmetric(self):
        g = Graph.from_edges(3, [(0, 1), (2, 1)])
        assert g.has_edge(1, 0) and g.has_edge(1, 2)
        assert not g.has_edge(0, 2)
        assert g.edges() == [(0, 1), (1, 2)]

    def test_self_loop_rejected(self):
        with pytest.raises(ArgumentError):
            Graph.from_edges(2, [(1, 1)])

    def test_too_many_vertices(self):
        with pytest.raises(CapacityError):
            Graph.from_edges(65, [])

    def test_vertex_set_operations(self):
        a = VertexSet.of([0, 2, 5])
        b = VertexSet.of([2, 3])
        assert (a & b).to_list() == [2]
        assert (a | b).to_list() == [0, 2, 3, 5]
        assert (a - b).to_list() == [0, 5]
        assert 5 in a and 1 not in a
        assert len(a) == 3
        assert members(mask_of([4, 1])) == [1, 4]

    def test_wheel_shape(self):
        g = make_wheel(5)
        assert g.n == 6
        assert g.num_edges == 10
        assert g.degree(5) == 5

    def test_wheel_needs_a_rim(self):
        with pytest.raises(ArgumentError):
            make_wheel(3)

    def test_star_centre(self):
        g = make_star(3)
        assert g.degree(0) == 3
        assert all(g.degree(v) == 1 for v in (1, 2, 3))

    def test_prism_triangles(self):
        g = make_prism()
        assert g.n == 6 and g.num_edges == 9
        for tri in ((0, 2, 4), (1, 3, 5)):
            assert all(g.has_edge(a, b) for a in tri for b in tri if a != b)

    def test_cartesian_product_matches_networkx(self):
        g, h = make_path(3), make_cycle(4)
        ours = cartesian_product(g, h).to_networkx()
        theirs = nx.cartesian_product(g.to_networkx(), h.to_networkx())
        assert nx.is_isomorphic(ours, theirs)

    def test_induced_relabels_in_order(self):
        g = make_cycle(5).induced([4, 0, 1])
        assert g.n == 3
        assert g.edges() == [(0, 1), (1, 2)]


class TestDistances:
    def test_cycle_diameter(self):
        assert all_pairs_distances(make_cycle(8)).diameter == 4

    def test_disconnected(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        assert not is_connected(g)
        assert not all_pairs_distances(g).connected
        with pytest.raises(DomainError):
            interval(g, 0, 2)

    @settings(max_examples=100, deadline=None)
    @given(connected_graphs(max_n=9))
    def test_distances_match_networkx(self, g):
        dist = all_pairs_distances(g)
        lengths = dict(nx.all_pairs_shortest_path_length(g.to_networkx()))
        for u in range(g.n):
            for v in range(g.n):
                assert dist[u, v] == lengths[u][v]

    @settings(max_examples=60, deadline=None)
    @given(connected_graphs(max_n=7))
    def test_interval_is_union_of_geodesics(self, g):
        nxg = g.to_networkx()
        for u in range(g.n):
            for v in range(g.n):
                on_paths = set()
                for path in nx.all_shortest_paths(nxg, u, v):
                    on_paths.update(path)
                assert interval(g, u, v).to_list() == sorted(on_paths)

    def test_complete_graph_intervals_are_pairs(self):
        g = make_complete(5)
        assert interval(g, 1, 3).to_list() == [1, 3]
        assert interval(g, 2, 2).to_list() == [2]

    @pytest.mark.parametrize("u, v", [(-1, 2), (0, 5), (7, 7)])
    def test_interval_rejects_vertices_outside_the_graph(self, u, v):
        with pytest.raises(ArgumentError, match="outside 0..4"):
            interval(make_cycle(5), u, v)
        with pytest.raises(ArgumentError):
            all_pairs_distances(make_cycle(5))[u, v]

    def test_networkx_round_trip(self):
        g = make_wheel(6)
        assert Graph.from_networkx(g.to_networkx()) == g
