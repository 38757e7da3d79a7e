import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ..errors import ArgumentError
from .graph import Graph, all_pairs_distances, members, require_connected
from .patterns import PatternName, has_induced, induced_cycles

logger = logging.getLogger(__name__)

CLASS_NAMES = ("modular", "weakly_modular", "diamond_weakly_modular", "bridged", "weakly_bridged")


@dataclass(frozen=True)
class ConditionWitness:
    """Instance where TC, QC or TDC is not met"""
    kind: str
    apex: int
    base: Tuple[int, ...]
    missing: str
    # TDC: (edge end, its lower neighbor left without a completing z)
    neighbor: Optional[Tuple[int, int]] = None
    # TDC2: lower neighbors (x of v, y of w) no single z completes
    pair: Optional[Tuple[int, int]] = None

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "apex": self.apex, "base": list(self.base), "missing": self.missing}
        if self.neighbor is not None:
            out["neighbor"] = list(self.neighbor)
        if self.pair is not None:
            out["pair"] = list(self.pair)
        return out


@dataclass(frozen=True)
class CycleWitness:
    cycle: Tuple[int, ...]

    def to_dict(self) -> dict:
        return {"kind": "isometric_cycle", "cycle": list(self.cycle)}


@dataclass(frozen=True)
class PatternWitness:
    pattern: str
    vertices: Tuple[int, ...]

    def to_dict(self) -> dict:
        return {"kind": "induced_" + self.pattern, "vertices": list(self.vertices)}


@dataclass
class ClassificationReport:
    modular: bool
    weakly_modular: bool
    diamond_weakly_modular: bool
    bridged: bool
    weakly_bridged: bool
    witnesses: Dict[str, object] = field(default_factory=dict)

    def flags(self) -> Dict[str, bool]:
        return {name: getattr(self, name) for name in CLASS_NAMES}

    def chain_violations(self) -> List[str]:
        """Broken links of bridged => weakly bridged => DWM => weakly modular, modular => weakly modular"""
        links = [
            ("bridged", "weakly_bridged"),
            ("weakly_bridged", "diamond_weakly_modular"),
            ("diamond_weakly_modular", "weakly_modular"),
            ("modular", "weakly_modular"),
        ]
        return [f"{a} => {b}" for a, b in links if getattr(self, a) and not getattr(self, b)]


class _Levels:
    """Distance rows plus level sets L[u][k] = {w : d(u,w) = k} as bitmasks"""

    def __init__(self, g: Graph):
        require_connected(g)
        self.g = g
        self.rows = all_pairs_distances(g).rows()
        self.levels: List[List[int]] = []
        for u in range(g.n):
            row = self.rows[u]
            by_level = [0] * (max(row) + 2 if row else 1)
            for w, k in enumerate(row):
                by_level[k] |= 1 << w
            self.levels.append(by_level)

    def level(self, u: int, k: int) -> int:
        if k < 0 or k >= len(self.levels[u]):
            return 0
        return self.levels[u][k]


def _equidistant_edges(lv: _Levels, u: int, least: int = 2):
    """Edges vw (v < w) with d(u,v) = d(u,w) >= least"""
    g = lv.g
    row = lv.rows[u]
    for v in range(g.n):
        m = row[v]
        if m < least:
            continue
        for w in members(g.adj[v] & lv.level(u, m) & ~((1 << (v + 1)) - 1)):
            yield v, w, m


def check_tc(g: Graph) -> Optional[ConditionWitness]:
    lv = _Levels(g)
    return _tc(lv)


def _tc(lv: _Levels) -> Optional[ConditionWitness]:
    g = lv.g
    for u in range(g.n):
        for v, w, m in _equidistant_edges(lv, u):
            if not g.adj[v] & g.adj[w] & lv.level(u, m - 1):
                return ConditionWitness("TC", u, (v, w), f"no common neighbor of {v},{w} at distance {m - 1} from {u}")
    return None


def _odd_cycle(lv: _Levels) -> Optional[ConditionWitness]:
    """An edge equidistant from some vertex, which exists iff the graph is not bipartite"""
    for u in range(lv.g.n):
        for v, w, m in _equidistant_edges(lv, u, least=1):
            return ConditionWitness("BIPARTITE", u, (v, w), f"edge {v}-{w} lies at distance {m} from {u} at both ends")
    return None


def check_qc(g: Graph) -> Optional[ConditionWitness]:
    return _qc(_Levels(g))


def _qc(lv: _Levels) -> Optional[ConditionWitness]:
    g = lv.g
    for u in range(g.n):
        for y in range(g.n):
            k = lv.rows[u][y] - 1
            if k < 2:
                continue
            candidates = g.adj[y] & lv.level(u, k)
            for v in members(candidates):
                for w in members(candidates & ~((1 << (v + 1)) - 1)):
                    if g.adj[v] >> w & 1:
                        continue
                    if not g.adj[v] & g.adj[w] & lv.level(u, k - 1):
                        return ConditionWitness(
                            "QC", u, (v, w, y), f"no common neighbor of {v},{w} at distance {k - 1} from {u}"
                        )
    return None


def check_tdc(g: Graph) -> Optional[ConditionWitness]:
    return _tdc(_Levels(g))


def check_tdc_pairwise(g: Graph) -> Optional[ConditionWitness]:
    """Stronger TDC: one z must serve a lower neighbor of v and one of w at once

    Graphs passing this and QC have every induced C5, house and W4-minus
    dominated. W4 minus a spoke passes TDC but not this.
    """
    lv = _Levels(g)
    for u in range(g.n):
        for v, w, m in _equidistant_edges(lv, u):
            below = lv.level(u, m - 1)
            common = g.adj[v] & g.adj[w] & below
            for x in members(g.adj[v] & below):
                near_x = common & (g.adj[x] | 1 << x)
                for y in members(g.adj[w] & below):
                    if not near_x & (g.adj[y] | 1 << y):
                        return ConditionWitness(
                            "TDC2", u, (v, w),
                            f"no common neighbor of {v},{w} at distance {m - 1} from {u} "
                            f"equal or adjacent to both {x} and {y}",
                            pair=(x, y),
                        )
    return None


def _tdc(lv: _Levels) -> Optional[ConditionWitness]:
    """Every lower neighbor of either end of an equidistant edge sees a completing z

    z is a common neighbor of v and w one level down; it may depend on the
    neighbor and may coincide with it.
    """
    g = lv.g
    for u in range(g.n):
        for v, w, m in _equidistant_edges(lv, u):
            below = lv.level(u, m - 1)
            common = g.adj[v] & g.adj[w] & below
            for end in (v, w):
                for x in members(g.adj[end] & below):
                    if not common & (g.adj[x] | 1 << x):
                        return ConditionWitness(
                            "TDC", u, (v, w),
                            f"no common neighbor of {v},{w} at distance {m - 1} from {u} "
                            f"equal or adjacent to {x}",
                            neighbor=(end, x),
                        )
    return None


def _first_induced(g: Graph, pattern: PatternName) -> Optional[PatternWitness]:
    found = has_induced(g, pattern)
    if found is None:
        return None
    return PatternWitness(pattern.value, tuple(found))


def classify(g: Graph) -> ClassificationReport:
    """Decide the five metric classes, attaching evidence for every false flag"""
    lv = _Levels(g)
    tc = _tc(lv)
    qc = _qc(lv)
    tdc = _tdc(lv)
    c4 = _first_induced(g, PatternName.C4)
    weakly_modular = tc is None and qc is None
    c5 = _first_induced(g, PatternName.C5) if weakly_modular and c4 is None else None

    witnesses: Dict[str, object] = {}
    odd = _odd_cycle(lv)
    modular = qc is None and odd is None
    if not modular:
        witnesses["modular"] = qc if qc is not None else odd
    if not weakly_modular:
        witnesses["weakly_modular"] = tc if tc is not None else qc
    if qc is not None or tdc is not None:
        witnesses["diamond_weakly_modular"] = qc if qc is not None else tdc
    weakly_bridged = weakly_modular and c4 is None
    bridged = weakly_bridged and c5 is None
    if not weakly_bridged:
        witnesses["weakly_bridged"] = witnesses["weakly_modular"] if not weakly_modular else c4
    if not bridged:
        witnesses["bridged"] = witnesses["weakly_bridged"] if not weakly_bridged else c5

    report = ClassificationReport(
        modular=modular,
        weakly_modular=weakly_modular,
        diamond_weakly_modular=qc is None and tdc is None,
        bridged=bridged,
        weakly_bridged=weakly_bridged,
        witnesses=witnesses,
    )
    broken = report.chain_violations()
    if broken:
        logger.warning("class inclusion chain broken for graph with %d vertices: %s", g.n, ", ".join(broken))
    return report


def is_weakly_modular(g: Graph) -> bool:
    lv = _Levels(g)
    return _tc(lv) is None and _qc(lv) is None


def is_modular(g: Graph) -> bool:
    """Bipartite and satisfying QC"""
    lv = _Levels(g)
    return _odd_cycle(lv) is None and _qc(lv) is None


def is_diamond_weakly_modular(g: Graph) -> bool:
    lv = _Levels(g)
    return _qc(lv) is None and _tdc(lv) is None


def is_bridged_by_characterization(g: Graph) -> bool:
    """Weakly modular with no induced C4 and no induced C5"""
    if has_induced(g, PatternName.C4) is not None or has_induced(g, PatternName.C5) is not None:
        return False
    return is_weakly_modular(g)


def is_weakly_bridged(g: Graph) -> bool:
    """Weakly modular with no induced C4"""
    if has_induced(g, PatternName.C4) is not None:
        return False
    return is_weakly_modular(g)


def _is_isometric(rows: List[List[int]], cycle: Sequence[int]) -> bool:
    k = len(cycle)
    for i in range(k):
        for j in range(i + 1, k):
            if rows[cycle[i]][cycle[j]] != min(j - i, k - (j - i)):
                return False
    return True


def is_bridged_by_cycles(g: Graph) -> Optional[CycleWitness]:
    """None when no isometric cycle of length at least 4 exists, else the first one found"""
    require_connected(g)
    dist = all_pairs_distances(g)
    rows = dist.rows()
    bound = 2 * dist.diameter + 1
    for cycle in induced_cycles(g, max_length=bound):
        if len(cycle) >= 4 and _is_isometric(rows, cycle):
            return CycleWitness(cycle)
    return None


def is_well_bridged_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    """Every cycle vertex has adjacent cycle-neighbors or a graph shortcut to some antipode"""
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        raise ArgumentError("a cycle needs at least 3 distinct vertices")
    if any(not 0 <= v < g.n for v in cycle):
        raise ArgumentError("cycle vertex outside the graph")
    for i in range(k):
        if not g.has_edge(cycle[i], cycle[(i + 1) % k]):
            raise ArgumentError(f"{cycle[i]} and {cycle[(i + 1) % k]} are not adjacent")
    rows = all_pairs_distances(g).rows()
    half = k // 2
    for i, v in enumerate(cycle):
        if g.has_edge(cycle[i - 1], cycle[(i + 1) % k]):
            continue
        antipodes = {cycle[(i + half) % k], cycle[(i - half) % k]}
        if not any(rows[v][x] < half for x in antipodes):
            return False
    return True
