"""Bit-exact graph6 codec (short form, n <= 62).

Format: optional ">>graph6<<" header, one length byte chr(n+63), then the
upper-triangle adjacency bits x(0,1), x(0,2), x(1,2), x(0,3), ... packed
big-endian six per byte, zero-padded, each 6-bit group offset by 63 so every
byte is printable ASCII in [63, 126].

The long form (n >= 63, records starting with '~') is deliberately rejected:
nothing here operates beyond n = 62 and a clear error beats silent truncation.
Decode errors name the byte offset at which the record went wrong.
"""

from __future__ import annotations

import os
import sys
from typing import Iterator, TextIO

from .errors import GraphDecodeError
from .graphs import Graph

HEADER = ">>graph6<<"
_MAX_N = 62


def from_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 record (optionally headered; trailing newline ok)."""
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise GraphDecodeError("graph6 record is not ASCII",
                                   offset=exc.start) from None
    record = text.rstrip("\r\n")
    base = 0
    if record.startswith(HEADER):
        record = record[len(HEADER):]
        base = len(HEADER)
    if not record:
        raise GraphDecodeError("empty graph6 record", offset=base)

    first = ord(record[0])
    if first == 126:
        raise GraphDecodeError(
            "long-form graph6 (n >= 63) is not supported", offset=base)
    if not 63 <= first <= 126:
        raise GraphDecodeError(
            f"length byte {record[0]!r} outside printable range [63,126]",
            offset=base)
    n = first - 63

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = record[1:]
    if len(body) < nbytes:
        raise GraphDecodeError(
            f"truncated body: need {nbytes} bytes for n={n}, got {len(body)}",
            offset=base + 1 + len(body))
    if len(body) > nbytes:
        raise GraphDecodeError(
            f"extra bytes after body: expected {nbytes} for n={n}",
            offset=base + 1 + nbytes)

    bits = 0
    for i, ch in enumerate(body):
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise GraphDecodeError(
                f"body byte {ch!r} outside printable range [63,126]",
                offset=base + 1 + i)
        bits = bits << 6 | val

    pad = nbytes * 6 - nbits
    if pad and bits & ((1 << pad) - 1):
        raise GraphDecodeError(
            "nonzero padding bits in final body byte",
            offset=base + len(record) - 1)
    bits >>= pad

    rows = [0] * n
    # bits now holds the triangle with x(0,1) as the most significant bit
    pos = nbits - 1
    for v in range(1, n):
        for u in range(v):
            if bits >> pos & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            pos -= 1
    return Graph(n, rows)


def to_graph6(g: Graph) -> str:
    """Encode canonically (no header, no newline)."""
    if g.n > _MAX_N:
        raise GraphDecodeError(
            f"graph6 short form supports n <= {_MAX_N}, got n={g.n}")
    n = g.n
    bits = 0
    nbits = 0
    for v in range(1, n):
        for u in range(v):
            bits = bits << 1 | (g.rows[u] >> v & 1)
            nbits += 1
    pad = (-nbits) % 6
    bits <<= pad
    out = [chr(n + 63)]
    for shift in range(nbits + pad - 6, -1, -6):
        out.append(chr((bits >> shift & 0x3F) + 63))
    return "".join(out)


def strict_mode_default() -> bool:
    """File ingestion is strict unless GRAPH6_STRICT=0 is set."""
    return os.environ.get("GRAPH6_STRICT", "1") != "0"


def iter_graph6_lines(lines: Iterator[str] | TextIO, *, strict: bool | None = None,
                      warn_to: TextIO | None = None) -> Iterator[tuple[int, Graph]]:
    """Yield (line_number, Graph) for each non-blank line of a graph6 file.

    Strict mode (the default) aborts on the first malformed line with an error
    naming it; lenient mode (GRAPH6_STRICT=0, or strict=False) skips bad lines
    with a warning on stderr. Blank lines are ignored in both modes.
    """
    if strict is None:
        strict = strict_mode_default()
    if warn_to is None:
        warn_to = sys.stderr
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip():
            continue
        try:
            g = from_graph6(line)
        except GraphDecodeError as exc:
            if strict:
                raise GraphDecodeError(exc.message, offset=exc.offset,
                                       line=lineno) from None
            print(f"graph6: skipping line {lineno}: {exc}", file=warn_to)
            continue
        yield lineno, g
