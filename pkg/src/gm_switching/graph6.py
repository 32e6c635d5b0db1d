"""graph6 codec (McKay's format, as used by nauty and graph catalogs)."""

from __future__ import annotations

from gm_switching.errors import Graph6Error
from gm_switching.graph import Graph

HEADER = b">>graph6<<"
_BIAS = 63
_SHORT_LIMIT = 62
_MEDIUM_LIMIT = 258047
_MAX_ORDER = 68719476735


def _encode_order(n: int) -> bytes:
    if n <= _SHORT_LIMIT:
        return bytes([n + _BIAS])
    if n <= _MEDIUM_LIMIT:
        return bytes([126] + [(n >> shift & 0x3F) + _BIAS for shift in (12, 6, 0)])
    if n <= _MAX_ORDER:
        return bytes([126, 126] + [(n >> shift & 0x3F) + _BIAS for shift in (30, 24, 18, 12, 6, 0)])
    raise Graph6Error(f"graph6 cannot encode {n} vertices")


def _decode_order(data: bytes) -> tuple[int, int]:
    """Return the vertex count and the offset of the first edge byte."""
    if data[0] != 126:
        return data[0] - _BIAS, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte graph6 length prefix")
        return _sextets_to_int(data[2:8]), 8
    if len(data) < 4:
        raise Graph6Error("truncated 4-byte graph6 length prefix")
    return _sextets_to_int(data[1:4]), 4


def _sextets_to_int(chunk: bytes) -> int:
    value = 0
    for byte in chunk:
        value = value << 6 | (byte - _BIAS)
    return value


def to_graph6(g: Graph) -> bytes:
    """Encode the upper triangle column by column: (0,1), (0,2), (1,2), (0,3), ..."""
    bits = [g.adj[j] >> i & 1 for j in range(1, g.n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    body = bytearray()
    for start in range(0, len(bits), 6):
        value = 0
        for bit in bits[start : start + 6]:
            value = value << 1 | bit
        body.append(value + _BIAS)
    return _encode_order(g.n) + bytes(body)


def parse_graph6(text: bytes | str) -> Graph:
    if isinstance(text, str):
        try:
            data = text.strip().encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error(f"non-ASCII character in graph6 string at position {exc.start}") from exc
    else:
        data = bytes(text)
    if data.startswith(HEADER):
        data = data[len(HEADER) :]
    data = data.rstrip(b"\r\n")
    if not data:
        raise Graph6Error("empty graph6 string")
    for position, byte in enumerate(data):
        if not _BIAS <= byte <= 126:
            raise Graph6Error(f"byte {byte!r} at position {position} is outside the graph6 range 63..126")
    n, offset = _decode_order(data)
    pair_count = n * (n - 1) // 2
    expected = offset + (pair_count + 5) // 6
    if len(data) < expected:
        raise Graph6Error(f"graph6 string too short for {n} vertices: {len(data)} bytes, expected {expected}")
    if len(data) > expected:
        raise Graph6Error(f"trailing data after graph6 encoding of {n} vertices")
    bits = (byte - _BIAS >> shift & 1 for byte in data[offset:] for shift in range(5, -1, -1))
    rows = [0] * n
    for j in range(1, n):
        for i in range(j):
            if next(bits):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))
