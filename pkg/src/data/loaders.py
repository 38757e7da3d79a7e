import csv
import logging
import os
import sys
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..errors import ArgumentError, GraphParseError, UnknownFixtureError
from ..models.axioms import AxiomId
from ..models.graph import (
    MAX_VERTICES,
    Graph,
    make_complete,
    make_cycle,
    make_diamond,
    make_path,
    make_prism,
    make_star,
    make_wheel,
)
from ..models.transit import TransitFunction
from .graph6 import HEADER, parse_edge_list, parse_graph6

logger = logging.getLogger(__name__)

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), "fixtures")
FIXTURE_SUFFIX = ".transit"

CONSTRUCTORS = {
    "wheel": make_wheel,
    "cycle": make_cycle,
    "complete": make_complete,
    "path": make_path,
    "star": make_star,
}
NULLARY_CONSTRUCTORS = {
    "prism": make_prism,
    "diamond": make_diamond,
}


def parse_transit_text(text: str) -> TransitFunction:
    """Read the transit text format

    'n <k>' comes first, then an optional 'labels' line. Each
    'u v : w ...' line sets both orders of a pair, 'u v -> w ...' sets
    one order only. Later lines win. Unlisted pairs are {u, v} and the
    diagonal is {u}. '#' starts a comment.
    """
    n: Optional[int] = None
    labels: Optional[List[str]] = None
    index: Dict[str, int] = {}
    table: List[int] = []
    pairs_seen = False

    def point(token: str, number: int) -> int:
        if token in index:
            return index[token]
        if labels is None:
            try:
                v = int(token)
            except ValueError:
                raise GraphParseError(f"unknown point {token!r}", line=number) from None
            if 0 <= v < n:
                return v
        raise GraphParseError(f"unknown point {token!r}", line=number)

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise GraphParseError("expected header 'n <size>'", line=number)
            try:
                n = int(tokens[1])
            except ValueError:
                raise GraphParseError(f"bad size {tokens[1]!r}", line=number) from None
            if not 0 <= n <= MAX_VERTICES:
                raise GraphParseError(f"size must be between 0 and {MAX_VERTICES}", line=number)
            table = _default_table(n)
            continue
        if tokens[0] == "labels":
            if labels is not None or pairs_seen:
                raise GraphParseError("labels must directly follow the header", line=number)
            labels = tokens[1:]
            if len(labels) != n or len(set(labels)) != n:
                raise GraphParseError(f"labels must name {n} distinct points", line=number)
            index = {name: i for i, name in enumerate(labels)}
            continue
        if len(tokens) < 3 or tokens[2] not in (":", "->"):
            raise GraphParseError("expected 'u v : ...' or 'u v -> ...'", line=number)
        u, v = point(tokens[0], number), point(tokens[1], number)
        pairs_seen = True
        mask = 0
        for token in tokens[3:]:
            mask |= 1 << point(token, number)
        table[u * n + v] = mask
        if tokens[2] == ":":
            table[v * n + u] = mask

    if n is None:
        raise GraphParseError("missing header 'n <size>'", line=1)
    return TransitFunction(n, tuple(table), None if labels is None else tuple(labels))


def _default_table(n: int) -> List[int]:
    return [(1 << (i // n)) | (1 << (i % n)) for i in range(n * n)] if n else []


def emit_transit_text(r: TransitFunction) -> str:
    """Inverse of parse_transit_text, listing only pairs that differ from the default"""
    lines = [f"n {r.n}"]
    if r.labels is not None:
        lines.append("labels " + " ".join(r.labels))

    def render(u: int, v: int, sep: str) -> str:
        values = " ".join(r.names(w for w in range(r.n) if r.value(u, v) >> w & 1))
        return f"{r.name(u)} {r.name(v)} {sep} {values}".rstrip()

    for u in range(r.n):
        for v in range(u, r.n):
            default = (1 << u) | (1 << v)
            forward, backward = r.value(u, v), r.value(v, u)
            if forward == backward:
                if forward != default:
                    lines.append(render(u, v, ":"))
                continue
            if forward != default:
                lines.append(render(u, v, "->"))
            if backward != default:
                lines.append(render(v, u, "->"))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class FixtureProfile:
    """Expected axiom profile of one shipped fixture"""
    name: str
    fails: AxiomId
    holds: Tuple[AxiomId, ...]
    discrepancies: Tuple[AxiomId, ...]
    description: str


class FixtureManager:
    """Manages loading and caching of the shipped transit-function fixtures"""

    def __init__(self, directory: str = FIXTURE_DIR):
        self._directory = directory
        self._profiles: Optional[Dict[str, FixtureProfile]] = None
        self._functions: Dict[str, TransitFunction] = {}

    def profiles(self) -> Dict[str, FixtureProfile]:
        if self._profiles is not None:
            return self._profiles
        path = os.path.join(self._directory, "profiles.csv")
        profiles = {}
        with open(path, "r", newline="") as f:
            for row in csv.DictReader(f):
                profiles[row["name"]] = FixtureProfile(
                    name=row["name"],
                    fails=AxiomId.parse(row["fails"]),
                    holds=tuple(AxiomId.parse(a) for a in row["holds"].split()),
                    discrepancies=tuple(AxiomId.parse(a) for a in row["discrepancies"].split()),
                    description=row["description"],
                )
        self._profiles = profiles
        logger.debug("loaded %d fixture profiles from %s", len(profiles), path)
        return profiles

    def names(self) -> List[str]:
        return list(self.profiles())

    def load(self, name: str) -> TransitFunction:
        if name in self._functions:
            return self._functions[name]
        if name not in self.profiles():
            raise UnknownFixtureError(name)
        path = os.path.join(self._directory, name + FIXTURE_SUFFIX)
        with open(path, "r") as f:
            r = parse_transit_text(f.read())
        self._functions[name] = r
        return r


# Global instance for multiprocessing compatibility
_fixture_manager = FixtureManager()


def list_fixtures() -> List[str]:
    return _fixture_manager.names()


def load_fixture(name: str) -> TransitFunction:
    """One of the shipped example functions by name"""
    return _fixture_manager.load(name)


def fixture_profile(name: str) -> FixtureProfile:
    profiles = _fixture_manager.profiles()
    if name not in profiles:
        raise UnknownFixtureError(name)
    return profiles[name]


def _fixture_name(spec: str) -> Optional[str]:
    name = os.path.basename(spec)
    if name.endswith(FIXTURE_SUFFIX):
        name = name[: -len(FIXTURE_SUFFIX)]
    if spec in (name, "fixtures/" + name, "fixtures/" + name + FIXTURE_SUFFIX) and name in list_fixtures():
        return name
    return None


def load_transit(spec: str) -> TransitFunction:
    """A transit function from a file path, '-' for stdin, or a fixture name such as 'fixtures/ex3'"""
    if spec == "-":
        return parse_transit_text(sys.stdin.read())
    if os.path.isfile(spec):
        with open(spec, "r") as f:
            return parse_transit_text(f.read())
    name = _fixture_name(spec)
    if name is None:
        raise UnknownFixtureError(spec)
    return load_fixture(name)


def build_constructor(expr: str) -> Optional[Graph]:
    """Evaluate 'wheel:5', 'cycle:8', 'prism' and friends; None when expr is not a constructor"""
    name, sep, arg = expr.partition(":")
    if not sep:
        factory = NULLARY_CONSTRUCTORS.get(expr)
        return factory() if factory is not None else None
    if name not in CONSTRUCTORS:
        if name in NULLARY_CONSTRUCTORS:
            raise ArgumentError(f"constructor {name!r} takes no size")
        return None
    try:
        k = int(arg)
    except ValueError:
        raise ArgumentError(f"constructor size must be an integer, got {arg!r}") from None
    return CONSTRUCTORS[name](k)


def _parse_graph_text(text: str) -> Graph:
    stripped = text.strip()
    if stripped.startswith(HEADER) or (stripped and not stripped.isdigit() and "\n" not in stripped and " " not in stripped):
        return parse_graph6(stripped)
    return parse_edge_list(text)


def load_graph(spec: str) -> Graph:
    """Resolve a graph argument: constructor, file (graph6 or edge list), '-' for stdin, or inline graph6"""
    graph = build_constructor(spec)
    if graph is not None:
        return graph
    if spec == "-":
        return _parse_graph_text(sys.stdin.read())
    if os.path.isfile(spec):
        with open(spec, "r") as f:
            return _parse_graph_text(f.read())
    return parse_graph6(spec)
