"""
Metric graph classes.

The fast level-set checkers are compared with literal readings of the
triangle, quadrangle and triangle-diamond conditions over networkx distances.
"""
from itertools import product

import networkx as nx
import pytest
from hypothesis import given, settings

from src.data.enumerators import enumerate_connected_graphs
from src.errors import ArgumentError, DomainError
from src.models.axioms import AxiomId, check_axiom
from src.models.graph import Graph, make_complete, make_cycle, make_path, make_prism, make_wheel
from src.models.metric import (
    check_qc,
    check_tc,
    check_tdc,
    check_tdc_pairwise,
    classify,
    is_bridged_by_characterization,
    is_bridged_by_cycles,
    is_diamond_weakly_modular,
    is_modular,
    is_weakly_bridged,
    is_weakly_modular,
    is_well_bridged_cycle,
)
from src.models.patterns import dominated_five_cycle_check
from src.models.transit import interval_function
from strategies import connected_graphs


def _distances(g):
    return dict(nx.all_pairs_shortest_path_length(g.to_networkx()))


def naive_tc(g):
    d = _distances(g)
    for u, (v, w) in product(range(g.n), g.edges()):
        k = d[u][v]
        if k != d[u][w] or k == 0:
            continue
        if not any(g.has_edge(x, v) and g.has_edge(x, w) and d[u][x] == k - 1 for x in range(g.n)):
            return False
    return True


def naive_qc(g):
    d = _distances(g)
    for u, v, w, z in product(range(g.n), repeat=4):
        if v == w or g.has_edge(v, w):
            continue
        if not (g.has_edge(z, v) and g.has_edge(z, w)):
            continue
        k = d[u][v]
        if k != d[u][w] or d[u][z] != k + 1 or k == 0:
            continue
        if not any(g.has_edge(x, v) and g.has_edge(x, w) and d[u][x] == k - 1 for x in range(g.n)):
            return False
    return True


def _equidistant(g, d):
    for u, (v, w) in product(range(g.n), g.edges()):
        k = d[u][v]
        if k == d[u][w] and k > 0:
            below = [x for x in range(g.n) if d[u][x] == k - 1]
            common = [z for z in below if g.has_edge(z, v) and g.has_edge(z, w)]
            yield v, w, below, common


def _close(g, a, b):
    return a == b or g.has_edge(a, b)


def naive_tdc(g):
    d = _distances(g)
    for v, w, below, common in _equidistant(g, d):
        for end in (v, w):
            for x in below:
                if g.has_edge(x, end) and not any(_close(g, z, x) for z in common):
                    return False
    return True


def naive_tdc_pairwise(g):
    d = _distances(g)
    for v, w, below, common in _equidistant(g, d):
        for x in (x for x in below if g.has_edge(x, v)):
            for y in (y for y in below if g.has_edge(y, w)):
                if not any(_close(g, z, x) and _close(g, z, y) for z in common):
                    return False
    return True


# W4 minus a spoke: K_{2,3} on {0,1} x {2,3,4} plus the edge 2-3
W4_MINUS_SPOKE = Graph.from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)])


class TestNamedGraphs:
    def test_four_wheel(self):
        report = classify(make_wheel(4))
        assert report.weakly_modular
        assert report.diamond_weakly_modular
        assert not report.modular
        assert not report.weakly_bridged
        assert not report.bridged
        assert report.witnesses["weakly_bridged"].vertices == (0, 1, 2, 3)

    def test_five_wheel(self):
        report = classify(make_wheel(5))
        assert report.diamond_weakly_modular
        assert report.weakly_bridged
        assert not report.bridged
        assert report.witnesses["bridged"].pattern == "C5"

    def test_prism_fails_only_the_diamond_condition(self):
        g = make_prism()
        assert check_tc(g) is None and check_qc(g) is None
        witness = check_tdc(g)
        assert witness.kind == "TDC"
        assert witness.apex == 0
        assert witness.base == (3, 5)
        assert witness.neighbor == (3, 2)
        assert witness.to_dict()["neighbor"] == [3, 2]
        report = classify(g)
        assert report.weakly_modular and not report.diamond_weakly_modular

    def test_prism_fails_pairwise_diamond_condition(self):
        witness = check_tdc_pairwise(make_prism())
        assert (witness.kind, witness.apex, witness.base, witness.pair) == ("TDC2", 0, (3, 5), (1, 4))

    def test_wheel_minus_spoke_is_diamond_weakly_modular(self):
        g = W4_MINUS_SPOKE
        assert check_tdc(g) is None
        report = classify(g)
        assert report.weakly_modular
        assert report.diamond_weakly_modular
        assert check_axiom(interval_function(g), AxiomId.J0P).holds

    def test_wheel_minus_spoke_separates_the_two_diamond_conditions(self):
        witness = check_tdc_pairwise(W4_MINUS_SPOKE)
        assert (witness.apex, witness.base, witness.pair) == (4, (2, 3), (0, 1))
        assert not dominated_five_cycle_check(W4_MINUS_SPOKE)

    def test_five_cycle_triangle_witness(self):
        witness = check_tc(make_cycle(5))
        assert (witness.kind, witness.apex, witness.base) == ("TC", 0, (2, 3))
        assert not is_weakly_modular(make_cycle(5))

    def test_six_cycle_quadrangle_witness(self):
        g = make_cycle(6)
        assert check_tc(g) is None
        witness = check_qc(g)
        assert (witness.kind, witness.apex, witness.base) == ("QC", 0, (2, 4, 3))
        assert classify(g).witnesses["weakly_modular"] == witness

    def test_four_cycle_is_modular(self):
        g = make_cycle(4)
        assert is_modular(g)
        assert is_diamond_weakly_modular(g)
        assert not is_weakly_bridged(g)

    def test_complete_graph_is_bridged_not_modular(self):
        g = make_complete(4)
        report = classify(g)
        assert report.bridged and report.weakly_bridged
        assert not report.modular
        assert report.witnesses["modular"].kind == "BIPARTITE"

    def test_trees_are_everything(self):
        report = classify(make_path(5))
        assert all(report.flags().values())

    def test_disconnected_graph_is_rejected(self):
        with pytest.raises(DomainError):
            classify(Graph.from_edges(3, [(0, 1)]))


class TestInclusionChain:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_chain_on_every_small_graph(self, n):
        for g in enumerate_connected_graphs(n):
            report = classify(g)
            assert report.chain_violations() == []
            if report.diamond_weakly_modular and check_tdc_pairwise(g) is None:
                assert dominated_five_cycle_check(g)
            assert report.bridged == is_bridged_by_characterization(g)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_j0p_on_interval_function_iff_diamond_weakly_modular(self, n):
        for g in enumerate_connected_graphs(n):
            holds = check_axiom(interval_function(g), AxiomId.J0P).holds
            assert holds == is_diamond_weakly_modular(g), g.edges()


class TestAgainstDefinitions:
    @settings(max_examples=150, deadline=None)
    @given(connected_graphs(max_n=8))
    def test_triangle_condition(self, g):
        assert (check_tc(g) is None) == naive_tc(g)

    @settings(max_examples=150, deadline=None)
    @given(connected_graphs(max_n=8))
    def test_weak_modularity(self, g):
        assert is_weakly_modular(g) == (naive_tc(g) and naive_qc(g))

    @settings(max_examples=150, deadline=None)
    @given(connected_graphs(max_n=8))
    def test_diamond_weak_modularity(self, g):
        assert is_diamond_weakly_modular(g) == (naive_qc(g) and naive_tdc(g))

    @settings(max_examples=150, deadline=None)
    @given(connected_graphs(max_n=8))
    def test_pairwise_diamond_condition(self, g):
        pairwise = check_tdc_pairwise(g) is None
        assert pairwise == naive_tdc_pairwise(g)
        if pairwise:
            assert check_tdc(g) is None


class TestCycles:
    def test_isometric_cycle_found(self):
        witness = is_bridged_by_cycles(make_cycle(4))
        assert witness is not None and len(witness.cycle) == 4

    def test_complete_graph_has_none(self):
        assert is_bridged_by_cycles(make_complete(4)) is None

    def test_five_wheel_rim_is_isometric(self):
        assert sorted(is_bridged_by_cycles(make_wheel(5)).cycle) == [0, 1, 2, 3, 4]

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_cycle_criterion_agrees_with_characterization(self, n):
        for g in enumerate_connected_graphs(n):
            assert (is_bridged_by_cycles(g) is None) == is_bridged_by_characterization(g)

    def test_well_bridged(self):
        fan = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)])
        assert is_well_bridged_cycle(fan, (0, 1, 2, 4))
        assert is_well_bridged_cycle(make_complete(3), (0, 1, 2))
        assert not is_well_bridged_cycle(make_wheel(4), (0, 1, 2, 3))
        assert not is_well_bridged_cycle(make_wheel(5), (0, 1, 2, 3, 4))

    def test_well_bridged_needs_a_cycle(self):
        with pytest.raises(ArgumentError):
            is_well_bridged_cycle(make_path(3), (0, 1, 2))
