from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..errors import ArgumentError, CapacityError, DomainError
from .graph import (
    MAX_VERTICES,
    Graph,
    VertexSet,
    all_pairs_distances,
    interval_mask,
    is_connected,
    mask_of,
    members,
    require_connected,
)


@dataclass(frozen=True)
class TransitFunction:
    """Total table R(u, v) over ordered pairs of a ground set 0..n-1

    Symmetry and the transit axioms are not enforced; they are checked by
    the axiom module so that tables violating them remain representable.
    """
    n: int
    table: Tuple[int, ...]
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"ground sets are limited to {MAX_VERTICES} points, got {self.n}")
        table = tuple(int(t) for t in self.table)
        if len(table) != self.n * self.n:
            raise ArgumentError(f"table needs {self.n * self.n} entries, got {len(table)}")
        limit = (1 << self.n) - 1
        if any(t & ~limit for t in table):
            raise ArgumentError("table value outside the ground set")
        object.__setattr__(self, "table", table)
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != self.n or len(set(labels)) != self.n:
                raise ArgumentError("labels must name every point exactly once")
            object.__setattr__(self, "labels", labels)

    def value(self, u: int, v: int) -> int:
        """R(u, v) as a bitmask"""
        return self.table[u * self.n + v]

    def __call__(self, u: int, v: int) -> VertexSet:
        return VertexSet(self.table[u * self.n + v])

    def name(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def names(self, vertices: Iterable[int]) -> List[str]:
        return [self.name(v) for v in vertices]

    def rows(self) -> List[List[int]]:
        """Nested-list view R[u][v] for hot loops"""
        n = self.n
        return [list(self.table[u * n:(u + 1) * n]) for u in range(n)]

    def restrict(self, vertices: Sequence[int]) -> "TransitFunction":
        """Induced function on a subset: values intersected with it, points renumbered in order"""
        keep = mask_of(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        table = []
        for u in vertices:
            for v in vertices:
                table.append(mask_of(index[w] for w in members(self.value(u, v) & keep)))
        labels = None if self.labels is None else tuple(self.labels[v] for v in vertices)
        return TransitFunction(len(vertices), tuple(table), labels)

    @classmethod
    def from_pairs(
        cls,
        n: int,
        values: Mapping[Tuple[int, int], Iterable[int]],
        symmetric: bool = True,
        labels: Optional[Sequence[str]] = None,
    ) -> "TransitFunction":
        """Build a table from explicit pair values

        Unlisted pairs default to {u, v} and the diagonal to {u}. With
        symmetric=True each listed pair also sets the reverse order, unless
        that order is listed explicitly as well.
        """
        table = [0] * (n * n)
        for u in range(n):
            for v in range(n):
                table[u * n + v] = (1 << u) | (1 << v)
        explicit = {(u, v): mask_of(ws) for (u, v), ws in values.items()}
        for (u, v), mask in explicit.items():
            if not (0 <= u < n and 0 <= v < n):
                raise ArgumentError(f"pair ({u}, {v}) outside the ground set")
            table[u * n + v] = mask
            if symmetric and (v, u) not in explicit:
                table[v * n + u] = mask
        return cls(n, tuple(table), None if labels is None else tuple(labels))


def interval_function(g: Graph) -> TransitFunction:
    """I_G as a transit function; requires a connected graph"""
    require_connected(g)
    rows = all_pairs_distances(g).rows()
    table = [interval_mask(rows, u, v) for u in range(g.n) for v in range(g.n)]
    return TransitFunction(g.n, tuple(table))


def underlying_graph(r: TransitFunction) -> Graph:
    """Edge uv iff R(u,v) = R(v,u) = {u,v}"""
    adj = [0] * r.n
    for u in range(r.n):
        for v in range(u + 1, r.n):
            pair = (1 << u) | (1 << v)
            if r.value(u, v) == pair and r.value(v, u) == pair:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(r.n, tuple(adj))


def _components(g: Graph) -> List[List[int]]:
    remaining = (1 << g.n) - 1
    out = []
    while remaining:
        start = remaining & -remaining
        seen = frontier = start
        while frontier:
            nxt = 0
            for v in members(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        out.append(members(seen))
        remaining &= ~seen
    return out


def equals_interval_function(r: TransitFunction) -> bool:
    """True iff R coincides with the interval function of its underlying graph"""
    g = underlying_graph(r)
    if not is_connected(g):
        parts = _components(g)
        raise DomainError(
            f"underlying graph has {len(parts)} components: "
            + " ".join("{" + ",".join(r.names(p)) + "}" for p in parts)
        )
    return interval_function(g).table == r.table


def differences(r: TransitFunction, other: TransitFunction) -> Dict[Tuple[int, int], Tuple[int, int]]:
    """Ordered pairs where two tables disagree, with both bitmasks"""
    if r.n != other.n:
        raise ArgumentError("tables have different ground sets")
    return {
        (u, v): (r.value(u, v), other.value(u, v))
        for u in range(r.n)
        for v in range(r.n)
        if r.value(u, v) != other.value(u, v)
    }
