"""
Text and binary graph formats.

Text: one ``u v`` pair of unsigned decimal ids per line; lines starting with
``#`` and blank lines are ignored.

Binary (little-endian, bit-exact)::

    b"TRIG" | version 0x01 | u64 n | u64 m | (n+1) x u64 offsets | 2m x u32 neighbors
"""

from __future__ import annotations

import logging
import struct
from typing import BinaryIO, Iterable, Iterator, TextIO

import numpy as np

from triangle_analytics.exceptions import CapacityError, GraphFormatError, GraphParseError, UsageError
from triangle_analytics.graph.structures import MAX_VERTEX_ID, Graph, normalize_pairs, validate

logger = logging.getLogger(__name__)

MAGIC = b"TRIG"
VERSION = 1
HEADER = struct.Struct("<4sBQQ")

TEXT = "text"
BINARY = "binary"
FORMATS = (TEXT, BINARY)


def _parse_id(token: str, line_number: int) -> int:
    if not (token.isascii() and token.isdigit()):
        raise GraphParseError(f"malformed vertex id {token!r}", line_number=line_number)
    value = int(token)
    if value > MAX_VERTEX_ID:
        raise CapacityError(f"line {line_number}: vertex id {value} exceeds the 32-bit range")
    return value


def load_edge_list(stream: Iterable[str]) -> Graph:
    """
    Parse a text edge list into a Graph.

    Self-loops and repeated edges are dropped (and counted in a warning); the
    vertex count is the largest id plus one.

    Raises:
        GraphParseError: on a malformed line, with its line number.
        CapacityError: on an id beyond the 32-bit range.
    """
    sources, targets = [], []
    for line_number, line in enumerate(stream, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if len(tokens) != 2:
            raise GraphParseError(f"expected 2 vertex ids, got {len(tokens)} tokens", line_number=line_number)
        sources.append(_parse_id(tokens[0], line_number))
        targets.append(_parse_id(tokens[1], line_number))

    n = max(max(sources, default=-1), max(targets, default=-1)) + 1
    first, second, loops, duplicates = normalize_pairs(sources, targets)
    if loops or duplicates:
        logger.warning(
            "Edge list normalized: dropped self_loops=%s duplicate_edges=%s",
            loops, duplicates,
        )
    return Graph.from_pairs(n, first, second)


def _decoded_lines(stream: BinaryIO) -> Iterator[str]:
    """Decode a byte stream line by line so a bad byte is reported with its line."""
    for line_number, raw in enumerate(stream, start=1):
        try:
            line = raw.decode("utf8")
        except UnicodeDecodeError as exc:
            raise GraphParseError(f"invalid UTF-8 byte at column {exc.start + 1}", line_number=line_number) from exc
        yield line


def write_edge_list(graph: Graph, stream: TextIO) -> None:
    """Write every undirected edge once, as ``u v`` with ``u < v``."""
    for u, v in graph.edges():
        stream.write(f"{u} {v}\n")


def write_binary(graph: Graph, stream: BinaryIO) -> None:
    stream.write(HEADER.pack(MAGIC, VERSION, graph.n, graph.m))
    stream.write(graph.offsets.astype("<u8").tobytes())
    stream.write(graph.neighbors.astype("<u4").tobytes())


def _read_exactly(stream: BinaryIO, size: int, what: str) -> bytes:
    data = stream.read(size)
    if len(data) != size:
        raise GraphFormatError(f"truncated binary graph: expected {size} bytes of {what}, got {len(data)}")
    return data


def load_binary(stream: BinaryIO) -> Graph:
    """
    Read a graph written by :func:`write_binary`.

    Raises:
        GraphFormatError: on a bad magic, unknown version, truncated payload or
            a payload that breaks the Graph invariants.
    """
    magic, version, n, m = HEADER.unpack(_read_exactly(stream, HEADER.size, "header"))
    if magic != MAGIC:
        raise GraphFormatError(f"bad magic {magic!r}")
    if version != VERSION:
        raise GraphFormatError(f"unsupported binary graph version {version}")
    if n > MAX_VERTEX_ID + 1:
        raise CapacityError(f"vertex count {n} exceeds the 32-bit id range")
    offsets = np.frombuffer(_read_exactly(stream, 8 * (n + 1), "offsets"), dtype="<u8")
    neighbors = np.frombuffer(_read_exactly(stream, 4 * 2 * m, "neighbors"), dtype="<u4")
    return validate(Graph(offsets.astype(np.int64), neighbors))


def load_graph(path: str, fmt: str = TEXT) -> Graph:
    """Load a graph file in the given format."""
    if fmt == TEXT:
        with open(path, "rb") as stream:
            return load_edge_list(_decoded_lines(stream))
    if fmt == BINARY:
        with open(path, "rb") as stream:
            return load_binary(stream)
    raise UsageError(f"unknown graph format {fmt!r}; expected one of {', '.join(FORMATS)}")


def save_graph(graph: Graph, path: str, fmt: str = TEXT) -> None:
    if fmt == TEXT:
        with open(path, "w", encoding="utf8") as stream:
            write_edge_list(graph, stream)
    elif fmt == BINARY:
        with open(path, "wb") as stream:
            write_binary(graph, stream)
    else:
        raise UsageError(f"unknown graph format {fmt!r}; expected one of {', '.join(FORMATS)}")
