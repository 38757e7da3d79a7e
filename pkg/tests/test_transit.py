"""Transit functions, interval functions and underlying graphs."""
import pytest
from hypothesis import given, settings

from src.data.loaders import load_fixture
from src.errors import ArgumentError, DomainError
from src.models.graph import Graph, make_cycle, make_wheel
from src.models.transit import (
    TransitFunction,
    differences,
    equals_interval_function,
    interval_function,
    underlying_graph,
)
from strategies import connected_graphs


class TestTransitFunction:
    def test_defaults_from_pairs(self):
        r = TransitFunction.from_pairs(3, {(0, 2): [0, 1, 2]})
        assert r(0, 2).to_list() == [0, 1, 2]
        assert r(2, 0).to_list() == [0, 1, 2]
        assert r(0, 1).to_list() == [0, 1]
        assert r(1, 1).to_list() == [1]

    def test_asymmetric_pairs(self):
        r = TransitFunction.from_pairs(2, {(0, 1): [0]}, symmetric=False)
        assert r(0, 1).to_list() == [0]
        assert r(1, 0).to_list() == [0, 1]

    def test_table_validation(self):
        with pytest.raises(ArgumentError):
            TransitFunction(2, (1, 3, 3))
        with pytest.raises(ArgumentError):
            TransitFunction(1, (2,))
        with pytest.raises(ArgumentError):
            TransitFunction(2, (1, 3, 3, 2), labels=("a", "a"))

    def test_restrict_intersects_values(self):
        r = interval_function(make_cycle(4)).restrict([0, 1, 2])
        assert r.n == 3
        assert r(0, 2).to_list() == [0, 1, 2]

    def test_labels_are_kept(self):
        r = load_fixture("ex3")
        assert r.names([0, 1]) == ["u", "v"]
        assert r.restrict([1, 3]).labels == ("v", "y")


class TestUnderlyingGraph:
    @settings(max_examples=100, deadline=None)
    @given(connected_graphs(max_n=8))
    def test_interval_function_recovers_its_graph(self, g):
        r = interval_function(g)
        assert underlying_graph(r) == g
        assert equals_interval_function(r)

    def test_fixture_graph(self):
        g = underlying_graph(load_fixture("j0-not"))
        assert g.edges() == [(0, 1), (0, 4), (1, 2), (1, 4), (2, 3), (2, 4), (3, 4)]
        assert not equals_interval_function(load_fixture("j0-not"))

    def test_wheel_fixture_is_an_interval_function(self):
        r = load_fixture("e4")
        # rim u x y v w, hub z
        g = Graph.from_edges(6, [(0, 2), (2, 3), (3, 1), (1, 5), (5, 0)] + [(4, v) for v in (0, 1, 2, 3, 5)])
        assert r.table == interval_function(g).table
        assert equals_interval_function(r)

    def test_cycle_fixtures(self):
        assert load_fixture("e1").table == interval_function(make_cycle(8)).table
        c4 = Graph.from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)])
        assert load_fixture("brp-not").table == interval_function(c4).table

    def test_disconnected_underlying_graph(self):
        full = TransitFunction(4, tuple([15] * 16))
        assert underlying_graph(full).num_edges == 0
        with pytest.raises(DomainError, match="4 components"):
            equals_interval_function(full)

    def test_differences(self):
        r = interval_function(make_wheel(4))
        other = TransitFunction.from_pairs(5, {(0, 2): [0, 2]})
        diff = differences(r, interval_function(make_wheel(4)))
        assert diff == {}
        diff = differences(other, r)
        assert (0, 2) in diff and (2, 0) in diff
        assert diff[(0, 2)] == (0b101, r.value(0, 2))
