"""Graph input/output: plain edge-list text and the graph6 encoding (n < 63)."""

from __future__ import annotations

from .graphs import Graph


class GraphFormatError(ValueError):
    pass


def read_edge_list(text: str) -> Graph:
    """First line is n; each subsequent non-empty line is "u v" (0-indexed)."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("empty edge-list input")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise GraphFormatError(f"bad vertex count line {lines[0]!r}") from exc
    g = Graph(n)
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line {ln!r}")
        g.add_edge(int(parts[0]), int(parts[1]))
    return g


def write_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line; only the short form (n < 63) is supported."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise GraphFormatError("empty graph6 input")
    data = [ord(ch) - 63 for ch in s]
    if any(not 0 <= x <= 63 for x in data):
        raise GraphFormatError(f"invalid graph6 characters in {text!r}")
    n = data[0]
    if n == 63:
        raise GraphFormatError("graph6 long form (n >= 63) is unsupported")
    need = (n * (n - 1) // 2 + 5) // 6
    bits_data = data[1:]
    if len(bits_data) != need:
        raise GraphFormatError(
            f"graph6 body has {len(bits_data)} groups, expected {need} for n={n}"
        )
    bits = []
    for x in bits_data:
        for shift in range(5, -1, -1):
            bits.append(x >> shift & 1)
    g = Graph(n)
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                g.add_edge(u, v)
            idx += 1
    return g


def write_graph6(g: Graph) -> str:
    if g.n >= 63:
        raise GraphFormatError("graph6 long form (n >= 63) is unsupported")
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        x = 0
        for bit in bits[i : i + 6]:
            x = x << 1 | bit
        out.append(chr(x + 63))
    return "".join(out)


def load_graph(text: str) -> Graph:
    """Sniff the format: a leading integer line means edge-list, otherwise the
    input is treated as graph6."""
    first = text.strip().splitlines()[0].strip() if text.strip() else ""
    tokens = first.split()
    if len(tokens) == 1 and tokens[0].lstrip("-").isdigit():
        return read_edge_list(text)
    return parse_graph6(text)
