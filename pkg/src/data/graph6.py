"""graph6 and plain edge-list codecs

graph6 bit packing is left to networkx; this module validates the input
first so malformed strings fail with the byte offset of the problem.
"""
from typing import IO, Iterable, Iterator, List, Optional, Tuple, Union

import networkx as nx

from ..errors import CapacityError, GraphParseError
from ..models.graph import MAX_VERTICES, Graph

HEADER = ">>graph6<<"
_BIAS = 63


def _size_prefix(data: str, pos: int) -> Tuple[int, int]:
    """Vertex count and the offset where adjacency bytes start"""
    if data[pos] != "~":
        return ord(data[pos]) - _BIAS, pos + 1
    if pos + 1 < len(data) and data[pos + 1] == "~":
        raise CapacityError(f"graphs are limited to {MAX_VERTICES} vertices")
    if pos + 4 > len(data):
        raise GraphParseError("truncated vertex count", offset=len(data))
    n = 0
    for i in range(pos + 1, pos + 4):
        n = (n << 6) | (ord(data[i]) - _BIAS)
    return n, pos + 4


def _validate(data: str, pos: int) -> None:
    for i in range(pos, len(data)):
        if not _BIAS <= ord(data[i]) <= 126:
            raise GraphParseError(f"invalid graph6 byte {data[i]!r}", offset=i)
    n, start = _size_prefix(data, pos)
    if n > MAX_VERTICES:
        raise CapacityError(f"graphs are limited to {MAX_VERTICES} vertices, got {n}")

    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    body = len(data) - start
    if body < expected:
        raise GraphParseError(f"expected {expected} adjacency bytes, got {body}", offset=len(data))
    if body > expected:
        raise GraphParseError("trailing bytes after adjacency data", offset=start + expected)
    padding = expected * 6 - nbits
    if padding and (ord(data[-1]) - _BIAS) & ((1 << padding) - 1):
        raise GraphParseError("nonzero padding bits", offset=len(data) - 1)


def parse_graph6(text: Union[str, bytes]) -> Graph:
    """Decode one graph6 string; byte offsets in errors count from the first byte given"""
    data = text.decode("ascii", errors="replace") if isinstance(text, bytes) else text
    data = data.rstrip("\r\n")
    pos = len(HEADER) if data.startswith(HEADER) else 0
    if pos >= len(data):
        raise GraphParseError("empty graph6 string", offset=pos)
    _validate(data, pos)
    try:
        decoded = nx.from_graph6_bytes(data[pos:].encode("ascii"))
    except (nx.NetworkXError, ValueError) as e:
        raise GraphParseError(str(e), offset=pos) from e
    return Graph.from_networkx(decoded)


def emit_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode("ascii").rstrip("\n")


def read_graph6_stream(source: Union[IO[str], Iterable[str]]) -> Iterator[Graph]:
    """One graph per non-blank line; errors carry the 1-based line number"""
    for number, line in enumerate(source, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            yield parse_graph6(line)
        except GraphParseError as e:
            raise GraphParseError(str(e), line=number) from e


def _meaningful_lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line.split()


def _int(token: str, number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphParseError(f"expected an integer, got {token!r}", line=number) from None


def _vertex_count(tokens: List[str], number: int) -> int:
    n = _int(tokens[1], number)
    if n < 1:
        raise GraphParseError(f"vertex count must be positive, got {n}", line=number)
    if n > MAX_VERTICES:
        raise CapacityError(f"graphs are limited to {MAX_VERTICES} vertices, got {n}")
    return n


def parse_edge_list(text: str) -> Graph:
    """One 'u v' pair per line after an optional 'n <count>' header; '#' starts a comment

    Without the header the vertex count is one past the largest endpoint.
    """
    n: Optional[int] = None
    edges = []
    for number, tokens in _meaningful_lines(text):
        if tokens[0] == "n":
            if n is not None or edges or len(tokens) != 2:
                raise GraphParseError("'n <count>' must be the first line", line=number)
            n = _vertex_count(tokens, number)
            continue
        if len(tokens) != 2:
            raise GraphParseError("expected 'u v'", line=number)
        u, v = _int(tokens[0], number), _int(tokens[1], number)
        if u < 0 or v < 0 or (n is not None and (u >= n or v >= n)):
            bound = f"0..{n - 1}" if n is not None else "the vertex range"
            raise GraphParseError(f"edge {u}-{v} outside {bound}", line=number)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", line=number)
        edges.append((u, v))
    if n is None:
        if not edges:
            raise GraphParseError("empty edge list", line=1)
        n = max(max(e) for e in edges) + 1
        if n > MAX_VERTICES:
            raise CapacityError(f"graphs are limited to {MAX_VERTICES} vertices, got {n}")
    return Graph.from_edges(n, edges)


def emit_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
