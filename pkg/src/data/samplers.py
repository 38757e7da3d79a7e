import numpy as np
from typing import List, Sequence

from ..errors import ArgumentError
from ..models.graph import MAX_VERTICES, Graph, all_pairs_distances, interval_mask
from ..models.transit import TransitFunction

PERTURBATION_RATE = 0.2


def chunk_random_state(seed: int, n: int, chunk: int) -> np.random.RandomState:
    """Independent reproducible stream per (seed, n, chunk)"""
    return np.random.RandomState([seed & 0xFFFFFFFF, (seed >> 32) & 0xFFFFFFFF, n, chunk])


def sample_connected_graph(n: int, random_state: np.random.RandomState, edge_probability: float = 0.4) -> Graph:
    """Random attachment tree plus independent extra edges"""
    if not 1 <= n <= MAX_VERTICES:
        raise ArgumentError(f"vertex count must be between 1 and {MAX_VERTICES}, got {n}")
    adj = [0] * n
    for v in range(1, n):
        parent = random_state.randint(0, v)
        adj[v] |= 1 << parent
        adj[parent] |= 1 << v
    for u in range(n):
        for v in range(u + 1, n):
            if random_state.random_sample() < edge_probability:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def _spread(bits: int, free: Sequence[int]) -> int:
    mask = 0
    for i, v in enumerate(free):
        if bits >> i & 1:
            mask |= 1 << v
    return mask


def _free_points(n: int, u: int, v: int) -> List[int]:
    return [w for w in range(n) if w != u and w != v]


def sample_transit_function(n: int, random_state: np.random.RandomState) -> TransitFunction:
    """Random symmetric function satisfying t1 and t3

    Half of the draws perturb the interval function of a random connected
    graph, the rest pick every pair value uniformly among supersets of
    the pair.
    """
    if n < 1:
        raise ArgumentError(f"ground set must be nonempty, got {n}")
    table = [0] * (n * n)
    perturb = n > 1 and random_state.random_sample() < 0.5
    rows = all_pairs_distances(sample_connected_graph(n, random_state)).rows() if perturb else None
    for u in range(n):
        table[u * n + u] = 1 << u
        for v in range(u + 1, n):
            free = _free_points(n, u, v)
            if perturb and random_state.random_sample() >= PERTURBATION_RATE:
                value = interval_mask(rows, u, v)
            else:
                value = (1 << u) | (1 << v) | _spread(random_state.randint(0, 1 << len(free)), free)
            table[u * n + v] = table[v * n + u] = value
    return TransitFunction(n, tuple(table))
