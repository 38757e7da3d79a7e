import json
import logging
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from ..errors import AmalgamError, ArgumentError, CapacityError, GraphToolError, InternalConsistencyError
from ..data.graph6 import emit_graph6, parse_graph6
from .graph import (
    MAX_VERTICES,
    Graph,
    VertexSet,
    all_pairs_distances,
    is_connected,
    make_complete,
    make_cycle,
    make_diamond,
    make_path,
    make_star,
    make_wheel,
    require_connected,
)
from .metric import is_bridged_by_characterization

logger = logging.getLogger(__name__)


def _as_list(s) -> List[int]:
    if isinstance(s, VertexSet):
        return s.to_list()
    return sorted(set(s))


def _gate(rows: List[List[int]], y: int, s: List[int]) -> Optional[int]:
    found = None
    for x in s:
        dyx = rows[y][x]
        if all(dyx + rows[x][w] == rows[y][w] for w in s):
            if found is not None:
                raise InternalConsistencyError(f"vertex {y} has two gates {found} and {x}")
            found = x
    return found


def gate(g: Graph, y: int, s) -> Optional[int]:
    """The vertex of s lying on a geodesic from y to every vertex of s, if any"""
    members_ = _as_list(s)
    if not members_:
        raise ArgumentError("gate of an empty set")
    require_connected(g)
    return _gate(all_pairs_distances(g).rows(), y, members_)


def is_gated(g: Graph, s) -> bool:
    members_ = _as_list(s)
    if not members_:
        raise ArgumentError("gatedness of an empty set")
    require_connected(g)
    rows = all_pairs_distances(g).rows()
    inside = set(members_)
    return all(_gate(rows, y, members_) is not None for y in range(g.n) if y not in inside)


def gated_subsets(g: Graph, max_size: int) -> Iterator[Tuple[int, ...]]:
    """Gated vertex subsets of size 1..max_size in lexicographic order"""
    require_connected(g)
    rows = all_pairs_distances(g).rows()
    for k in range(1, min(max_size, g.n) + 1):
        for subset in combinations(range(g.n), k):
            members_ = list(subset)
            if all(_gate(rows, y, members_) is not None for y in range(g.n) if y not in subset):
                yield subset


@dataclass(frozen=True)
class AmalgamSpec:
    """Two graphs and a vertex bijection S1 -> S2 along which they are identified"""
    g1: Graph
    g2: Graph
    iso: Tuple[Tuple[int, int], ...]

    @property
    def shared(self) -> Tuple[List[int], List[int]]:
        return [a for a, _ in self.iso], [b for _, b in self.iso]

    def to_json(self) -> str:
        payload = {"g1": emit_graph6(self.g1), "g2": emit_graph6(self.g2), "iso": [list(p) for p in self.iso]}
        return json.dumps(payload, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "AmalgamSpec":
        try:
            payload = json.loads(text)
            iso = tuple((int(a), int(b)) for a, b in payload["iso"])
            return cls(parse_graph6(payload["g1"]), parse_graph6(payload["g2"]), iso)
        except GraphToolError:
            raise
        except (KeyError, TypeError, ValueError) as e:
            raise ArgumentError(f"malformed amalgam spec: {e}") from e


def _check_bijection(spec: AmalgamSpec) -> None:
    s1, s2 = spec.shared
    if not s1:
        raise AmalgamError("nonempty", "the shared subgraph is empty")
    if len(set(s1)) != len(s1) or len(set(s2)) != len(s2):
        raise AmalgamError("bijection", "iso repeats a vertex")
    if any(not 0 <= a < spec.g1.n for a in s1) or any(not 0 <= b < spec.g2.n for b in s2):
        raise AmalgamError("bijection", "iso names a vertex outside its graph")


def _check_isomorphism(spec: AmalgamSpec) -> None:
    for (a, b), (a2, b2) in combinations(spec.iso, 2):
        if spec.g1.has_edge(a, a2) != spec.g2.has_edge(b, b2):
            raise AmalgamError(
                "isomorphism", f"{a}-{a2} in g1 and {b}-{b2} in g2 disagree on adjacency"
            )


def validate(spec: AmalgamSpec) -> None:
    """Raise AmalgamError naming the first failed invariant"""
    _check_bijection(spec)
    _check_isomorphism(spec)
    s1, s2 = spec.shared
    for label, g, s in (("g1", spec.g1, s1), ("g2", spec.g2, s2)):
        if not is_connected(g):
            raise AmalgamError("connected", f"{label} is disconnected")
        if not is_gated(g, s):
            raise AmalgamError("gated", f"{sorted(s)} is not gated in {label}")


def glue(spec: AmalgamSpec) -> Graph:
    """Identify S2 into S1; g1 keeps its numbering, the rest of g2 follows in ascending order"""
    _check_bijection(spec)
    _check_isomorphism(spec)
    g1, g2 = spec.g1, spec.g2
    size = g1.n + g2.n - len(spec.iso)
    if size > MAX_VERTICES:
        raise CapacityError(f"amalgam would have {size} vertices")
    index = {b: a for a, b in spec.iso}
    nxt = g1.n
    for v in range(g2.n):
        if v not in index:
            index[v] = nxt
            nxt += 1
    edges = list(g1.edges())
    edges.extend((index[a], index[b]) for a, b in g2.edges())
    return Graph.from_edges(size, set(tuple(sorted(e)) for e in edges))


def gated_amalgam(spec: AmalgamSpec) -> Graph:
    validate(spec)
    return glue(spec)


NAMED_ORDER = 5


def _named_graphs() -> List[Tuple[str, Graph]]:
    graphs = [(f"complete:{k}", make_complete(k)) for k in range(2, 6)]
    graphs += [
        ("wheel:4", make_wheel(4)),
        ("wheel:5", make_wheel(5)),
        ("cycle:4", make_cycle(4)),
        ("diamond", make_diamond()),
        ("path:3", make_path(3)),
        ("path:4", make_path(4)),
        ("star:3", make_star(3)),
        ("fan:4", Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)])),
    ]
    return graphs


def _atlas_bridged(min_order: int, max_order: int) -> List[Tuple[str, Graph]]:
    """Connected bridged graphs from the networkx atlas, one per isomorphism class"""
    found = []
    for index, nx_graph in enumerate(nx.graph_atlas_g()):
        order = nx_graph.number_of_nodes()
        if order > max_order:
            break
        if order < min_order or not nx.is_connected(nx_graph):
            continue
        g = Graph.from_networkx(nx_graph)
        if is_bridged_by_characterization(g):
            found.append((f"atlas:{index}", g))
    return found


def corpus_graphs(max_order: int = 6) -> List[Tuple[str, Graph]]:
    """Base graphs of the closure corpus: named graphs, then bridged atlas graphs above their order"""
    return _named_graphs() + _atlas_bridged(NAMED_ORDER + 1, max_order)


def _isomorphic_images(g1: Graph, s1: Sequence[int], g2: Graph, s2: Sequence[int]) -> Iterator[Tuple[Tuple[int, int], ...]]:
    for image in permutations(s2):
        iso = tuple(zip(s1, image))
        if all(g1.has_edge(a, a2) == g2.has_edge(b, b2) for (a, b), (a2, b2) in combinations(iso, 2)):
            yield iso


def closure_corpus(max_shared: int = 3, max_order: int = 6,
                   first: Optional[str] = None) -> Iterator[Tuple[str, str, AmalgamSpec]]:
    """Gated amalgams of two corpus graphs along a shared gated subgraph of up to max_shared vertices

    Atlas graphs are paired with the named graphs only. With first given,
    only amalgams whose g1 has that name are produced.
    """
    named = _named_graphs()
    graphs = named + _atlas_bridged(NAMED_ORDER + 1, max_order)
    named_set = {name for name, _ in named}
    gated = {name: list(gated_subsets(g, max_shared)) for name, g in graphs}
    logger.debug("closure corpus: %d base graphs, %d gated subsets", len(graphs), sum(map(len, gated.values())))
    for name1, g1 in graphs:
        if first is not None and name1 != first:
            continue
        for name2, g2 in graphs:
            if name1 not in named_set and name2 not in named_set:
                continue
            for s1 in gated[name1]:
                for s2 in gated[name2]:
                    if len(s1) != len(s2):
                        continue
                    for iso in _isomorphic_images(g1, s1, g2, s2):
                        yield name1, name2, AmalgamSpec(g1, g2, iso)
