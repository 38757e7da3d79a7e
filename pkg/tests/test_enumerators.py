"""Graph and transit-function universes, exhaustive and sampled."""
import networkx as nx
import pytest

from src.data.enumerators import (
    candidate_count,
    connected_graphs_in_range,
    enumerate_connected_graphs,
    enumerate_transit_functions,
    transit_count,
)
from src.data.samplers import chunk_random_state, sample_connected_graph, sample_transit_function
from src.errors import ArgumentError, CapacityError
from src.models.axioms import AxiomId, satisfies_all
from src.models.graph import is_connected


class TestConnectedGraphs:
    @pytest.mark.parametrize("n, expected", [(1, 1), (2, 1), (3, 4), (4, 38), (5, 728)])
    def test_labeled_counts(self, n, expected):
        assert sum(1 for _ in enumerate_connected_graphs(n)) == expected

    def test_distinct_and_connected(self):
        graphs = list(enumerate_connected_graphs(4))
        assert len(set(graphs)) == len(graphs)
        assert all(nx.is_connected(g.to_networkx()) for g in graphs)

    def test_ranges_partition_the_universe(self):
        whole = list(enumerate_connected_graphs(4))
        total = candidate_count(4)
        pieces = [g for start in range(0, total, 10) for g in connected_graphs_in_range(4, start, start + 10)]
        assert pieces == whole

    @pytest.mark.parametrize("n", [0, 8])
    def test_out_of_range(self, n):
        with pytest.raises(CapacityError):
            list(enumerate_connected_graphs(n))


class TestTransitFunctions:
    @pytest.mark.parametrize("n, expected", [(1, 1), (2, 1), (3, 8), (4, 4096)])
    def test_exhaustive_counts(self, n, expected):
        assert transit_count(n) == expected
        assert sum(1 for _ in enumerate_transit_functions(n)) == expected

    def test_exhaustive_members_satisfy_baseline(self):
        assert all(satisfies_all(r, (AxiomId.T1, AxiomId.T2, AxiomId.T3)) for r in enumerate_transit_functions(3))

    def test_extra_constraints_filter(self):
        constrained = list(enumerate_transit_functions(3, constraints=(AxiomId.T1, AxiomId.T2, AxiomId.T3, AxiomId.B1)))
        assert len(constrained) == 4
        assert all(satisfies_all(r, (AxiomId.B1,)) for r in constrained)

    def test_exhaustive_needs_baseline(self):
        with pytest.raises(ArgumentError):
            list(enumerate_transit_functions(3, constraints=(AxiomId.T1,)))

    def test_exhaustive_size_limit(self):
        with pytest.raises(CapacityError):
            list(enumerate_transit_functions(5))

    def test_sampled_size_limit(self):
        with pytest.raises(CapacityError):
            list(enumerate_transit_functions(7, samples=1))

    def test_sampled_is_deterministic(self):
        first = list(enumerate_transit_functions(5, samples=20, seed=3, chunk=1))
        second = list(enumerate_transit_functions(5, samples=20, seed=3, chunk=1))
        assert first == second
        assert len(first) == 20

    def test_chunks_differ(self):
        a = list(enumerate_transit_functions(5, samples=20, seed=3, chunk=0))
        b = list(enumerate_transit_functions(5, samples=20, seed=3, chunk=1))
        assert a != b

    def test_samples_lie_in_the_exhaustive_universe(self):
        universe = set(enumerate_transit_functions(4))
        assert all(r in universe for r in enumerate_transit_functions(4, samples=50, seed=1))


class TestSamplers:
    def test_sampled_graphs_are_connected(self):
        rs = chunk_random_state(0, 6, 0)
        assert all(is_connected(sample_connected_graph(6, rs)) for _ in range(50))

    def test_sampled_functions_satisfy_baseline(self):
        rs = chunk_random_state(7, 5, 2)
        for _ in range(50):
            r = sample_transit_function(5, rs)
            assert satisfies_all(r, (AxiomId.T1, AxiomId.T2, AxiomId.T3))

    def test_bad_size(self):
        with pytest.raises(ArgumentError):
            sample_transit_function(0, chunk_random_state(0, 0, 0))
