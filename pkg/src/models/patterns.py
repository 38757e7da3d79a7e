from enum import Enum
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator, List, Optional, Tuple

from .graph import Graph, VertexSet, make_cycle, make_diamond, members, popcount, require_connected


class PatternName(str, Enum):
    C4 = "C4"
    C5 = "C5"
    HOUSE = "HOUSE"
    W4_MINUS = "W4_MINUS"
    DIAMOND = "DIAMOND"


def _house() -> Graph:
    # square 1-2-3-4 with roof 0 on the edge 1-4
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 4)])


def _w4_minus() -> Graph:
    # rim 0-1-2-3, hub 4 missing the spoke to 3
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4), (2, 4)])


PATTERN_GRAPHS = {
    PatternName.C4: make_cycle(4),
    PatternName.C5: make_cycle(5),
    PatternName.HOUSE: _house(),
    PatternName.W4_MINUS: _w4_minus(),
    PatternName.DIAMOND: make_diamond(),
}

FIVE_VERTEX_OBSTRUCTIONS = (PatternName.C5, PatternName.HOUSE, PatternName.W4_MINUS)


def _edge_code(g: Graph, order: Tuple[int, ...]) -> int:
    code = 0
    bit = 0
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if g.has_edge(order[i], order[j]):
                code |= 1 << bit
            bit += 1
    return code


@lru_cache(maxsize=None)
def canonical_code(g: Graph) -> int:
    """Isomorphism invariant for small graphs: minimum edge code over all orderings"""
    return min(_edge_code(g, order) for order in permutations(range(g.n)))


def is_isomorphic_small(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if sorted(g.degree(v) for v in g.vertices) != sorted(h.degree(v) for v in h.vertices):
        return False
    return canonical_code(g) == canonical_code(h)


def _occurrences(g: Graph, pattern: PatternName) -> Iterator[Tuple[int, ...]]:
    target = PATTERN_GRAPHS[pattern]
    k = target.n
    for subset in combinations(range(g.n), k):
        mask = 0
        for v in subset:
            mask |= 1 << v
        edges = sum(popcount(g.adj[v] & mask) for v in subset) // 2
        if edges != target.num_edges:
            continue
        if is_isomorphic_small(g.induced(subset), target):
            yield subset


def has_induced(g: Graph, pattern: PatternName) -> Optional[VertexSet]:
    """First vertex subset (lexicographic) inducing the pattern, or None"""
    for subset in _occurrences(g, PatternName(pattern)):
        return VertexSet.of(subset)
    return None


def dominated_five_cycle_check(g: Graph) -> bool:
    """Every induced C5, house and W4-minus has a vertex adjacent to all five of its vertices"""
    require_connected(g)
    return undominated_occurrence(g) is None


def undominated_occurrence(g: Graph) -> Optional[Tuple[PatternName, Tuple[int, ...]]]:
    for pattern in FIVE_VERTEX_OBSTRUCTIONS:
        for subset in _occurrences(g, pattern):
            mask = 0
            for v in subset:
                mask |= 1 << v
            if not any(g.adj[z] & mask == mask for z in range(g.n)):
                return pattern, subset
    return None


def simple_cycles(g: Graph, max_length: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Every cycle once, starting at its smallest vertex, second vertex below the last"""
    limit = g.n if max_length is None else min(max_length, g.n)
    yield from _cycles(g, limit, induced=False)


def induced_cycles(g: Graph, max_length: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Chordless cycles of length at least 3, same normal form as simple_cycles"""
    limit = g.n if max_length is None else min(max_length, g.n)
    yield from _cycles(g, limit, induced=True)


def _cycles(g: Graph, limit: int, induced: bool) -> Iterator[Tuple[int, ...]]:
    for start in range(g.n):
        above = ~((1 << (start + 1)) - 1)
        stack: List[Tuple[List[int], int]] = [([start], 1 << start)]
        while stack:
            path, used = stack.pop()
            last = path[-1]
            interior = used & ~(1 << start) & ~(1 << last)
            for v in reversed(members(g.adj[last] & above & ~used)):
                if induced and g.adj[v] & interior:
                    continue
                closes = len(path) >= 2 and g.has_edge(v, start)
                if closes and path[1] < v:
                    yield tuple(path + [v])
                if closes and induced:
                    continue
                if len(path) + 1 < limit:
                    stack.append((path + [v], used | 1 << v))


def is_chordless(g: Graph, cycle: Tuple[int, ...]) -> bool:
    mask = 0
    for v in cycle:
        mask |= 1 << v
    return all(popcount(g.adj[v] & mask) == 2 for v in cycle)
