"""graph6 encoding for graphs of order at most 62.

Layout: one byte ``n + 63``, then the upper triangle read column by column
(x(0,1), x(0,2), x(1,2), x(0,3), ...) packed big-endian into 6-bit groups,
zero padded, each group written as ``value + 63``.
"""
from __future__ import annotations

from typing import IO, Iterable, Iterator

from .errors import CapacityError, Graph6ParseError
from .graph import Graph

MAX_GRAPH6_ORDER = 62


def encode(g: Graph) -> str:
    n = g.n
    if n > MAX_GRAPH6_ORDER:
        raise CapacityError(f"graph6 supports order <= {MAX_GRAPH6_ORDER}, got {n}")
    out = [chr(n + 63)]
    acc = 0
    nbits = 0
    rows = g.rows
    for j in range(1, n):
        rj = rows[j]
        for i in range(j):
            acc = (acc << 1) | (rj >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode(line: str | bytes) -> Graph:
    """Parse one graph6 line (a trailing newline is tolerated)."""
    if isinstance(line, bytes):
        try:
            line = line.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6ParseError("non-ASCII byte", exc.start) from None
    if line.endswith("\n"):
        line = line[:-1]
        if line.endswith("\r"):
            line = line[:-1]
    if line.startswith(">>graph6<<"):
        line = line[10:]
    if not line:
        raise Graph6ParseError("empty graph6 line", 0)
    for pos, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise Graph6ParseError(f"non-printable or out-of-range byte {ord(ch)!r}", pos)
    n = ord(line[0]) - 63
    if n > MAX_GRAPH6_ORDER:
        raise Graph6ParseError(f"order prefix {n} is outside the supported range", 0)
    nbytes = (n * (n - 1) // 2 + 5) // 6
    body = line[1:]
    if len(body) < nbytes:
        raise Graph6ParseError(
            f"truncated bit block: expected {nbytes} data bytes, got {len(body)}", len(line)
        )
    if len(body) > nbytes:
        raise Graph6ParseError("trailing garbage after bit block", 1 + nbytes)
    rows = [0] * n
    bits = _iter_bits(body)
    for j in range(1, n):
        for i in range(j):
            if next(bits):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    pad = n * (n - 1) // 2
    if nbytes and any(bits):
        # padding bits must be zero
        raise Graph6ParseError("non-zero padding bits", 1 + (pad // 6))
    return Graph._from_rows(n, tuple(rows))


def _iter_bits(body: str) -> Iterator[int]:
    for ch in body:
        value = ord(ch) - 63
        for shift in range(5, -1, -1):
            yield value >> shift & 1


def read_graph6(stream: IO[str] | Iterable[str]) -> Iterator[Graph]:
    """Decode a stream of graph6 lines, skipping blank lines."""
    for line in stream:
        if line.strip():
            yield decode(line.strip())


def write_graph6(graphs: Iterable[Graph], stream: IO[str]) -> int:
    count = 0
    for g in graphs:
        stream.write(encode(g) + "\n")
        count += 1
    return count
