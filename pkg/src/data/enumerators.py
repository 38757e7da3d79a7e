"""Exhaustive and sampled universes for the verification campaigns"""
from itertools import product
from typing import Iterable, Iterator, List, Optional, Tuple

from ..errors import ArgumentError, CapacityError
from ..models.axioms import AxiomId, satisfies_all
from ..models.graph import Graph
from ..models.transit import TransitFunction
from .samplers import chunk_random_state, sample_transit_function

MAX_ENUMERATED_GRAPH = 7
MAX_EXHAUSTIVE_TRANSIT = 4
MAX_SAMPLED_TRANSIT = 6
BASELINE = frozenset({AxiomId.T1, AxiomId.T2, AxiomId.T3})


def _pair_list(n: int) -> List[Tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def candidate_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def transit_count(n: int) -> int:
    """Size of the exhaustive symmetric t1/t3 universe: every pair picks a superset of itself"""
    return 1 << (max(n - 2, 0) * n * (n - 1) // 2)


def _check_graph_range(n: int) -> None:
    if not 1 <= n <= MAX_ENUMERATED_GRAPH:
        raise CapacityError(f"labeled enumeration covers 1 <= n <= {MAX_ENUMERATED_GRAPH}, got {n}")


def connected_graphs_in_range(n: int, start: int, stop: int) -> Iterator[Graph]:
    """Connected graphs among the edge-subset codes start..stop-1; bit k of a code is the k-th pair"""
    _check_graph_range(n)
    pairs = _pair_list(n)
    full = (1 << n) - 1
    for code in range(start, min(stop, candidate_count(n))):
        adj = [0] * n
        k = 0
        c = code
        while c:
            if c & 1:
                i, j = pairs[k]
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            c >>= 1
            k += 1
        seen = frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= frontier
        if seen == full:
            yield Graph(n, tuple(adj))


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected labeled graph on n vertices exactly once"""
    _check_graph_range(n)
    return connected_graphs_in_range(n, 0, candidate_count(n))


def _symmetric_functions(n: int) -> Iterator[TransitFunction]:
    pairs = _pair_list(n)
    choices = []
    for u, v in pairs:
        free = [w for w in range(n) if w != u and w != v]
        base = (1 << u) | (1 << v)
        options = []
        for bits in range(1 << len(free)):
            mask = base
            for i, w in enumerate(free):
                if bits >> i & 1:
                    mask |= 1 << w
            options.append(mask)
        choices.append(options)
    for values in product(*choices):
        table = [0] * (n * n)
        for u in range(n):
            table[u * n + u] = 1 << u
        for (u, v), mask in zip(pairs, values):
            table[u * n + v] = table[v * n + u] = mask
        yield TransitFunction(n, tuple(table))


def enumerate_transit_functions(
    n: int,
    constraints: Iterable[AxiomId] = BASELINE,
    samples: Optional[int] = None,
    seed: int = 0,
    chunk: int = 0,
) -> Iterator[TransitFunction]:
    """Symmetric t1/t3 functions satisfying the constraints

    Without samples the stream is exhaustive and needs n <= 4 with t1, t2
    and t3 among the constraints. With samples, that many seeded draws are
    made and those meeting the constraints are yielded.
    """
    constraints = frozenset(constraints)
    extra = sorted(constraints - BASELINE, key=lambda a: a.value)
    if n < 1:
        raise ArgumentError(f"ground set must be nonempty, got {n}")
    if n > MAX_SAMPLED_TRANSIT:
        raise CapacityError(f"transit universes are limited to n <= {MAX_SAMPLED_TRANSIT}, got {n}")
    if samples is None:
        if not BASELINE <= constraints:
            raise ArgumentError("exhaustive enumeration needs t1, t2 and t3 among the constraints")
        if n > MAX_EXHAUSTIVE_TRANSIT:
            raise CapacityError(f"exhaustive enumeration is limited to n <= {MAX_EXHAUSTIVE_TRANSIT}; use sampling")
        source: Iterable[TransitFunction] = _symmetric_functions(n)
    else:
        rs = chunk_random_state(seed, n, chunk)
        source = (sample_transit_function(n, rs) for _ in range(samples))
    for r in source:
        if not extra or satisfies_all(r, extra):
            yield r
