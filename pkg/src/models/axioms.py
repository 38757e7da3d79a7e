"""Betweenness axioms on transit functions, decided by exhaustive instantiation.

Each axiom has a pruned search that walks its quantified variables in
lexicographic order, so the first violation found is the lexicographically
first one, and an instance predicate ``violated_at`` used for replay.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from ..errors import ArgumentError
from .graph import members
from .transit import TransitFunction

STRICT = "strict"
SUBSET = "subset"


class AxiomId(str, Enum):
    T1 = "t1"
    T2 = "t2"
    T3 = "t3"
    B1 = "b1"
    B2 = "b2"
    B3 = "b3"
    B4 = "b4"
    J0 = "J0"
    J0P = "J0p"
    TA = "ta"
    S1 = "s1"
    S2 = "s2"
    BR = "br"
    BRP = "brp"
    IB1 = "IB1"
    IB2 = "IB2"
    IB3 = "IB3"
    IB4 = "IB4"
    IB5 = "IB5"
    IB6 = "IB6"
    IB7 = "IB7"

    @classmethod
    def parse(cls, text: str) -> "AxiomId":
        key = text.strip().replace("'", "p").replace("′", "p")
        for axiom in cls:
            if axiom.value.lower() == key.lower():
                return axiom
        raise ArgumentError(f"unknown axiom: {text}")

    @classmethod
    def parse_list(cls, text: str) -> List["AxiomId"]:
        return [cls.parse(part) for part in text.split(",") if part.strip()]


VARIABLES: Dict[AxiomId, Tuple[str, ...]] = {
    AxiomId.T1: ("u", "v"),
    AxiomId.T2: ("u", "v"),
    AxiomId.T3: ("u",),
    AxiomId.B1: ("u", "v", "x"),
    AxiomId.B2: ("u", "v", "x", "y"),
    AxiomId.B3: ("u", "v", "x", "y"),
    AxiomId.B4: ("u", "v", "x"),
    AxiomId.J0: ("u", "x", "y", "v"),
    AxiomId.J0P: ("u", "x", "y", "v"),
    AxiomId.TA: ("u", "v", "w"),
    AxiomId.S1: ("u", "u_bar", "v", "v_bar"),
    AxiomId.S2: ("u", "u_bar", "v", "v_bar"),
    AxiomId.BR: ("x", "y", "u", "v", "z"),
    AxiomId.BRP: ("u", "v", "x", "z"),
    AxiomId.IB1: ("u", "v"),
    AxiomId.IB2: ("u", "x", "v"),
    AxiomId.IB3: ("u", "x"),
    AxiomId.IB4: ("u", "v", "w", "x"),
    AxiomId.IB5: ("u", "v", "w", "x"),
    AxiomId.IB6: ("u", "u_prime", "v", "v_prime"),
    AxiomId.IB7: ("u", "u_prime", "v", "v_prime"),
}

ALL_AXIOMS = tuple(AxiomId)


@dataclass(frozen=True)
class AxiomReport:
    axiom: AxiomId
    holds: bool
    witness: Optional[Tuple[int, ...]] = None

    @property
    def variables(self) -> Tuple[str, ...]:
        return VARIABLES[self.axiom]

    def bindings(self) -> Dict[str, int]:
        if self.witness is None:
            return {}
        return dict(zip(self.variables, self.witness))

    def to_dict(self) -> dict:
        return {
            "axiom": self.axiom.value,
            "holds": self.holds,
            "witness": None if self.witness is None else list(self.witness),
        }


class _Table:
    """Row view of R plus the pair-image masks the searches share"""

    def __init__(self, r: TransitFunction):
        self.n = r.n
        self.R = r.rows()
        n = self.n
        # E[a]: b with R(a,b) = {a,b};  F[b]: a with R(a,b) = {a,b}
        self.E = [0] * n
        self.F = [0] * n
        for a in range(n):
            for b in range(n):
                if self.R[a][b] == (1 << a) | (1 << b):
                    self.E[a] |= 1 << b
                    self.F[b] |= 1 << a
        # proper edges: a != b and R(a,b) = {a,b}
        self.edges = [self.E[a] & ~(1 << a) for a in range(n)]


def _t1(t: _Table):
    for u in range(t.n):
        for v in range(t.n):
            if not t.R[u][v] >> u & 1:
                return (u, v)
    return None


def _t2(t: _Table):
    for u in range(t.n):
        for v in range(t.n):
            if t.R[u][v] != t.R[v][u]:
                return (u, v)
    return None


def _t3(t: _Table):
    for u in range(t.n):
        if t.R[u][u] != 1 << u:
            return (u,)
    return None


def _b1(t: _Table):
    R = t.R
    for u in range(t.n):
        for v in range(t.n):
            for x in members(R[u][v] & ~(1 << v)):
                if R[u][x] >> v & 1:
                    return (u, v, x)
    return None


def _b2(t: _Table):
    R = t.R
    for u in range(t.n):
        for v in range(t.n):
            for x in members(R[u][v]):
                extra = R[u][x] & ~R[u][v]
                if extra:
                    return (u, v, x, members(extra)[0])
    return None


def _b3(t: _Table):
    R = t.R
    for u in range(t.n):
        for v in range(t.n):
            for x in members(R[u][v]):
                for y in members(R[u][x]):
                    if not R[y][v] >> x & 1:
                        return (u, v, x, y)
    return None


def _b4(t: _Table):
    R = t.R
    for u in range(t.n):
        for v in range(t.n):
            for x in members(R[u][v]):
                if R[u][x] & R[x][v] != 1 << x:
                    return (u, v, x)
    return None


def _j0(t: _Table, prime: bool, containment: str):
    R = t.R
    n = t.n
    for u in range(n):
        for x in range(n):
            if x == u:
                continue
            for y in range(n):
                if y == u or y == x or not R[u][y] >> x & 1:
                    continue
                for v in range(n):
                    if v in (u, x, y) or not R[x][v] >> y & 1 or R[u][v] >> x & 1:
                        continue
                    if prime:
                        four = (1 << u) | (1 << x) | (1 << y) | (1 << v)
                        inter = R[u][y] & R[x][v]
                        if inter & ~four:
                            continue
                        if containment == STRICT and inter == four:
                            continue
                    return (u, x, y, v)
    return None


def _ta(t: _Table):
    R = t.R
    n = t.n
    for u in range(n):
        for v in members(t.E[u]):
            ruv = R[u][v]
            for w in range(n):
                if ruv & R[u][w] != 1 << u or ruv & R[v][w] != 1 << v:
                    continue
                if R[u][w] & R[v][w] != 1 << w:
                    continue
                if R[u][w] != (1 << u) | (1 << w) or R[v][w] != (1 << v) | (1 << w):
                    return (u, v, w)
    return None


def _s1(t: _Table):
    R = t.R
    n = t.n
    for u in range(n):
        for ub in members(t.edges[u]):
            for v in range(n):
                ruv = R[u][v]
                if not ruv >> ub & 1:
                    continue
                for vb in members(t.edges[v] & ruv):
                    rb = R[ub][vb]
                    if rb >> u & 1 and not rb >> v & 1:
                        return (u, ub, v, vb)
    return None


def _s2(t: _Table):
    R = t.R
    n = t.n
    for u in range(n):
        for ub in members(t.edges[u]):
            for v in range(n):
                ruv = R[u][v]
                if not ruv >> ub & 1:
                    continue
                for vb in members(t.edges[v] & ~ruv):
                    if not R[ub][vb] >> v & 1 and not R[u][vb] >> ub & 1:
                        return (u, ub, v, vb)
    return None


def _br(t: _Table):
    R = t.R
    n = t.n
    for x in range(n):
        for y in members(t.E[x]):
            covered = t.E[x] | t.E[y]
            for u in members(t.E[x]):
                for v in members(t.F[y]):
                    bad = R[u][v] & ~covered
                    if bad:
                        return (x, y, u, v, members(bad)[0])
    return None


def _brp(t: _Table):
    R = t.R
    n = t.n
    for u in range(n):
        for v in range(n):
            for x in members(t.E[u] & t.F[v]):
                bad = R[u][v] & ~t.E[x]
                if bad:
                    return (u, v, x, members(bad)[0])
    return None


def _ib1(t: _Table):
    for u in range(t.n):
        for v in range(t.n):
            if not t.R[u][v] >> u & 1:
                return (u, v)
    return None


def _ib2(t: _Table):
    R = t.R
    for u in range(t.n):
        for x in range(t.n):
            for v in range(t.n):
                if R[u][v] >> x & 1 and not R[v][u] >> x & 1:
                    return (u, x, v)
    return None


def _ib3(t: _Table):
    for u in range(t.n):
        extra = t.R[u][u] & ~(1 << u)
        if extra:
            return (u, members(extra)[0])
    return None


def _ib4(t: _Table):
    R = t.R
    for u in range(t.n):
        for v in range(t.n):
            for w in members(R[u][v]):
                extra = R[u][w] & ~R[u][v]
                if extra:
                    return (u, v, w, members(extra)[0])
    return None


def _ib5(t: _Table):
    R = t.R
    n = t.n
    for u in range(n):
        for v in range(n):
            for w in range(n):
                if not R[u][w] >> v & 1:
                    continue
                for x in range(n):
                    rux = R[u][x]
                    if rux >> v & 1 and rux >> w & 1 and not R[v][x] >> w & 1:
                        return (u, v, w, x)
    return None


def _ib6(t: _Table):
    R = t.R
    n = t.n
    for u in range(n):
        for up in members(t.edges[u]):
            for v in range(n):
                ruv = R[u][v]
                if not ruv >> up & 1:
                    continue
                for vp in members(t.edges[v] & ruv):
                    rp = R[up][vp]
                    if rp >> u & 1 and not rp >> v & 1:
                        return (u, up, v, vp)
    return None


def _ib7(t: _Table):
    R = t.R
    n = t.n
    for u in range(n):
        for up in members(t.edges[u]):
            for v in range(n):
                ruv = R[u][v]
                if not ruv >> up & 1:
                    continue
                for vp in members(t.edges[v] & ~ruv):
                    if not R[up][vp] >> v & 1 and not R[u][vp] >> up & 1:
                        return (u, up, v, vp)
    return None


_SEARCHES: Dict[AxiomId, Callable[[_Table], Optional[Tuple[int, ...]]]] = {
    AxiomId.T1: _t1,
    AxiomId.T2: _t2,
    AxiomId.T3: _t3,
    AxiomId.B1: _b1,
    AxiomId.B2: _b2,
    AxiomId.B3: _b3,
    AxiomId.B4: _b4,
    AxiomId.TA: _ta,
    AxiomId.S1: _s1,
    AxiomId.S2: _s2,
    AxiomId.BR: _br,
    AxiomId.BRP: _brp,
    AxiomId.IB1: _ib1,
    AxiomId.IB2: _ib2,
    AxiomId.IB3: _ib3,
    AxiomId.IB4: _ib4,
    AxiomId.IB5: _ib5,
    AxiomId.IB6: _ib6,
    AxiomId.IB7: _ib7,
}


def _search(t: _Table, axiom: AxiomId, containment: str) -> Optional[Tuple[int, ...]]:
    if axiom is AxiomId.J0:
        return _j0(t, prime=False, containment=containment)
    if axiom is AxiomId.J0P:
        return _j0(t, prime=True, containment=containment)
    return _SEARCHES[axiom](t)


def check_axiom(r: TransitFunction, axiom, containment: str = STRICT) -> AxiomReport:
    """Decide one axiom on R, reporting the lexicographically first violation"""
    if not isinstance(axiom, AxiomId):
        axiom = AxiomId.parse(axiom)
    if containment not in (STRICT, SUBSET):
        raise ArgumentError(f"containment must be {STRICT!r} or {SUBSET!r}")
    witness = _search(_Table(r), axiom, containment)
    return AxiomReport(axiom, witness is None, witness)


def axiom_profile(
    r: TransitFunction, axioms: Iterable[AxiomId] = ALL_AXIOMS, containment: str = STRICT
) -> Dict[AxiomId, AxiomReport]:
    t = _Table(r)
    out = {}
    for axiom in axioms:
        witness = _search(t, axiom, containment)
        out[axiom] = AxiomReport(axiom, witness is None, witness)
    return out


def satisfies_all(r: TransitFunction, axioms: Iterable[AxiomId], containment: str = STRICT) -> bool:
    t = _Table(r)
    return all(_search(t, axiom, containment) is None for axiom in axioms)


def violated_at(r: TransitFunction, axiom: AxiomId, witness: Tuple[int, ...], containment: str = STRICT) -> bool:
    """Evaluate one axiom instance directly from its definition"""
    axiom = AxiomId(axiom)
    if len(witness) != len(VARIABLES[axiom]):
        raise ArgumentError(f"{axiom.value} binds {len(VARIABLES[axiom])} variables, got {len(witness)}")

    def R(a: int, b: int) -> set:
        return set(r(a, b))

    def pair(a: int, b: int) -> set:
        return {a, b}

    def edge(a: int, b: int) -> bool:
        return a != b and R(a, b) == pair(a, b)

    if axiom is AxiomId.T1:
        u, v = witness
        return u not in R(u, v)
    if axiom is AxiomId.T2:
        u, v = witness
        return R(u, v) != R(v, u)
    if axiom is AxiomId.T3:
        (u,) = witness
        return R(u, u) != {u}
    if axiom is AxiomId.B1:
        u, v, x = witness
        return x in R(u, v) and x != v and v in R(u, x)
    if axiom is AxiomId.B2:
        u, v, x, y = witness
        return x in R(u, v) and y in R(u, x) and y not in R(u, v)
    if axiom is AxiomId.B3:
        u, v, x, y = witness
        return x in R(u, v) and y in R(u, x) and x not in R(y, v)
    if axiom is AxiomId.B4:
        u, v, x = witness
        return x in R(u, v) and R(u, x) & R(x, v) != {x}
    if axiom in (AxiomId.J0, AxiomId.J0P):
        u, x, y, v = witness
        if len({u, x, y, v}) != 4:
            return False
        if not (x in R(u, y) and y in R(x, v) and x not in R(u, v)):
            return False
        if axiom is AxiomId.J0:
            return True
        inter = R(u, y) & R(x, v)
        four = {u, x, y, v}
        if containment == STRICT:
            return inter < four
        return inter <= four
    if axiom is AxiomId.TA:
        u, v, w = witness
        premises = (
            R(u, v) & R(u, w) == {u}
            and R(u, v) & R(v, w) == {v}
            and R(u, w) & R(v, w) == {w}
            and R(u, v) == pair(u, v)
        )
        return premises and not (R(u, w) == pair(u, w) and R(v, w) == pair(v, w))
    if axiom in (AxiomId.S1, AxiomId.IB6):
        u, ub, v, vb = witness
        return (
            edge(u, ub) and edge(v, vb) and u in R(ub, vb) and ub in R(u, v) and vb in R(u, v)
            and v not in R(ub, vb)
        )
    if axiom in (AxiomId.S2, AxiomId.IB7):
        u, ub, v, vb = witness
        return (
            edge(u, ub) and edge(v, vb) and ub in R(u, v) and v not in R(ub, vb) and vb not in R(u, v)
            and ub not in R(u, vb)
        )
    if axiom is AxiomId.BR:
        x, y, u, v, z = witness
        return (
            R(x, y) == pair(x, y) and R(x, u) == pair(x, u) and R(v, y) == pair(v, y) and z in R(u, v)
            and R(x, z) != pair(x, z) and R(y, z) != pair(y, z)
        )
    if axiom is AxiomId.BRP:
        u, v, x, z = witness
        return R(u, x) == pair(u, x) and R(x, v) == pair(x, v) and z in R(u, v) and R(x, z) != pair(x, z)
    if axiom is AxiomId.IB1:
        u, v = witness
        return u not in R(u, v)
    if axiom is AxiomId.IB2:
        u, x, v = witness
        return x in R(u, v) and x not in R(v, u)
    if axiom is AxiomId.IB3:
        u, x = witness
        return x in R(u, u) and x != u
    if axiom is AxiomId.IB4:
        u, v, w, x = witness
        return w in R(u, v) and x in R(u, w) and x not in R(u, v)
    if axiom is AxiomId.IB5:
        u, v, w, x = witness
        return v in R(u, x) and w in R(u, x) and v in R(u, w) and w not in R(v, x)
    raise ArgumentError(f"no instance predicate for {axiom.value}")


def lemma_s1s2_failure(r: TransitFunction) -> Optional[Tuple[int, int, int]]:
    """First (u,v,w) with no x in R(u,v)∩R(u,w) such that R(x,v)∩R(x,w) = {x}"""
    t = _Table(r)
    R = t.R
    for u in range(t.n):
        for v in range(t.n):
            for w in range(t.n):
                if not any(R[x][v] & R[x][w] == 1 << x for x in members(R[u][v] & R[u][w])):
                    return (u, v, w)
    return None


def class_queries(r: TransitFunction) -> Dict[str, bool]:
    """Class membership read off the betweenness relation alone"""
    t = _Table(r)
    dwm = _j0(t, prime=True, containment=STRICT) is None
    return {
        "diamond_weakly_modular": dwm,
        "bridged": dwm and _br(t) is None,
        "weakly_bridged": dwm and _brp(t) is None,
    }
