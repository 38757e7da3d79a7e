import numpy as np
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, List, Sequence, Tuple

from ..errors import ArgumentError, CapacityError, DomainError

MAX_VERTICES = 64
UNREACHABLE = -1


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask with one bit per listed vertex"""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> List[int]:
    """Vertices of a bitmask in ascending order"""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class VertexSet:
    """Immutable set of vertices backed by a bitmask"""
    mask: int = 0

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "VertexSet":
        return cls(mask_of(vertices))

    def __contains__(self, v: int) -> bool:
        return v >= 0 and bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(members(self.mask))

    def __len__(self) -> int:
        return popcount(self.mask)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & ~other.mask)

    def issubset(self, other: "VertexSet") -> bool:
        return self.mask & ~other.mask == 0

    def to_list(self) -> List[int]:
        return members(self.mask)

    def __repr__(self) -> str:
        return "{" + ",".join(str(v) for v in self) + "}"


@dataclass(frozen=True)
class Graph:
    """Finite simple graph on vertices 0..n-1 with bitmask adjacency"""
    n: int
    adj: Tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"graphs are limited to {MAX_VERTICES} vertices, got {self.n}")
        adj = tuple(int(a) for a in self.adj)
        if len(adj) != self.n:
            raise ArgumentError(f"adjacency has {len(adj)} rows for {self.n} vertices")
        limit = (1 << self.n) - 1
        for v, nbrs in enumerate(adj):
            if nbrs & ~limit:
                raise ArgumentError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if nbrs >> v & 1:
                raise ArgumentError(f"self-loop at vertex {v}")
            for w in members(nbrs):
                if not adj[w] >> v & 1:
                    raise ArgumentError(f"adjacency not symmetric for edge {v}-{w}")
        object.__setattr__(self, "adj", adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        if not 0 <= n <= MAX_VERTICES:
            raise CapacityError(f"graphs are limited to {MAX_VERTICES} vertices, got {n}")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ArgumentError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ArgumentError(f"edge {u}-{v} outside 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edges(self) -> List[Tuple[int, int]]:
        """Edges (u, v) with u < v in lexicographic order"""
        return [(u, v) for u in range(self.n) for v in members(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, relabelled in the order the vertices are given"""
        index = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            row = 0
            for w in members(self.adj[v]):
                if w in index:
                    row |= 1 << index[w]
            adj.append(row)
        return Graph(len(vertices), tuple(adj))

    def delete_vertex(self, v: int) -> "Graph":
        return self.induced([w for w in range(self.n) if w != v])

    def to_networkx(self):
        import networkx as nx
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    @classmethod
    def from_networkx(cls, nx_graph) -> "Graph":
        """Convert a networkx graph, numbering nodes in sorted order"""
        nodes = sorted(nx_graph.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[a], index[b]) for a, b in nx_graph.edges()))


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs hop distances; UNREACHABLE marks pairs in different components"""
    n: int
    d: np.ndarray

    def __getitem__(self, pair: Tuple[int, int]) -> int:
        u, v = pair
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ArgumentError(f"pair ({u}, {v}) outside 0..{self.n - 1}")
        return int(self.d[u, v])

    def rows(self) -> List[List[int]]:
        """Distances as nested lists, faster than numpy for scalar-heavy loops"""
        return self.d.tolist()

    @property
    def connected(self) -> bool:
        return not bool((self.d == UNREACHABLE).any())

    @property
    def diameter(self) -> int:
        if self.n == 0:
            return 0
        if not self.connected:
            raise DomainError("diameter of a disconnected graph")
        return int(self.d.max())


@lru_cache(maxsize=8192)
def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex using bitmask frontiers"""
    d = np.full((g.n, g.n), UNREACHABLE, dtype=np.int16)
    for source in range(g.n):
        seen = 1 << source
        frontier = seen
        level = 0
        while frontier:
            for v in members(frontier):
                d[source, v] = level
            nxt = 0
            for v in members(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
            level += 1
    d.flags.writeable = False
    return DistanceMatrix(g.n, d)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in members(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DomainError("graph is disconnected")


def interval_mask(rows: List[List[int]], u: int, v: int) -> int:
    """Bitmask of {w : d(u,w) + d(w,v) = d(u,v)} from distance rows"""
    target = rows[u][v]
    du, dv = rows[u], rows[v]
    mask = 0
    for w in range(len(du)):
        if du[w] + dv[w] == target:
            mask |= 1 << w
    return mask


def interval(g: Graph, u: int, v: int) -> VertexSet:
    """Vertices on some shortest u,v-path"""
    dist = all_pairs_distances(g)
    if dist[u, v] == UNREACHABLE:
        raise DomainError(f"vertices {u} and {v} lie in different components")
    return VertexSet(interval_mask(dist.rows(), u, v))


def make_path(k: int) -> Graph:
    if k < 1:
        raise ArgumentError(f"path needs at least 1 vertex, got {k}")
    return Graph.from_edges(k, ((i, i + 1) for i in range(k - 1)))


def make_cycle(k: int) -> Graph:
    if k < 3:
        raise ArgumentError(f"cycle needs at least 3 vertices, got {k}")
    return Graph.from_edges(k, ((i, (i + 1) % k) for i in range(k)))


def make_complete(k: int) -> Graph:
    if k < 1:
        raise ArgumentError(f"complete graph needs at least 1 vertex, got {k}")
    return Graph.from_edges(k, ((i, j) for i in range(k) for j in range(i + 1, k)))


def make_wheel(k: int) -> Graph:
    """Rim 0..k-1 in cyclic order, hub k"""
    if k < 4:
        raise ArgumentError(f"wheel needs at least 4 rim vertices, got {k}")
    rim = [(i, (i + 1) % k) for i in range(k)]
    spokes = [(i, k) for i in range(k)]
    return Graph.from_edges(k + 1, rim + spokes)


def make_star(k: int) -> Graph:
    """Centre 0 with k leaves"""
    if k < 1:
        raise ArgumentError(f"star needs at least 1 leaf, got {k}")
    return Graph.from_edges(k + 1, ((0, i) for i in range(1, k + 1)))


def make_diamond() -> Graph:
    """K4 minus the edge 0-3"""
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """(a,b) becomes a*h.n + b"""
    if g.n * h.n > MAX_VERTICES:
        raise CapacityError(f"product would have {g.n * h.n} vertices")
    edges = []
    for a in range(g.n):
        for b, b2 in h.edges():
            edges.append((a * h.n + b, a * h.n + b2))
    for a, a2 in g.edges():
        for b in range(h.n):
            edges.append((a * h.n + b, a2 * h.n + b))
    return Graph.from_edges(g.n * h.n, edges)


def make_prism() -> Graph:
    """K3 x K2: triangles {0,2,4} and {1,3,5}, rungs 0-1, 2-3, 4-5"""
    return cartesian_product(make_complete(3), make_complete(2))
