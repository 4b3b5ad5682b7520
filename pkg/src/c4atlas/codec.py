"""graph6 text codec, DOT export, and the role-label sidecar format.

graph6: chr(63+n) for n <= 62 (standard multi-byte forms above), then the
upper-triangle adjacency bits in column order (0,1),(0,2),(1,2),(0,3),...
padded with zeros to a multiple of 6, each 6-bit group emitted MSB-first
as chr(63+value).

Sidecar: one "role=vertex_id" line per role assignment; the role "W" may
repeat (one line per quadric vertex).
"""

from __future__ import annotations

from .graphs import Graph

MAX_VERTICES = 100_000


class MalformedInput(ValueError):
    pass


class TooLarge(ValueError):
    pass


def _encode_count(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(
            chr(63 + ((n >> s) & 63)) for s in (30, 24, 18, 12, 6, 0)
        )
    raise TooLarge(f"n={n} exceeds the graph6 range")


def _decode_count(s: str) -> tuple[int, int]:
    """(n, chars consumed)."""
    if not s:
        raise MalformedInput("empty graph6 string")
    if s[0] != "~":
        return ord(s[0]) - 63, 1
    if len(s) >= 2 and s[1] != "~":
        if len(s) < 4:
            raise MalformedInput("truncated graph6 vertex count")
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        return n, 4
    if len(s) < 8:
        raise MalformedInput("truncated graph6 vertex count")
    n = 0
    for ch in s[2:8]:
        n = (n << 6) | (ord(ch) - 63)
    return n, 8


def graph6_encode(g: Graph, max_n: int = MAX_VERTICES) -> str:
    if g.n > max_n:
        raise TooLarge(f"n={g.n} exceeds the configured limit {max_n}")
    out = [_encode_count(g.n)]
    bits = 0
    nbits = 0
    for j in range(1, g.n):
        aj = g.adj[j]
        for i in range(j):
            bits = (bits << 1) | (1 if i in aj else 0)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + bits))
                bits = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (bits << (6 - nbits))))
    return "".join(out)


def graph6_decode(text: str, max_n: int = MAX_VERTICES) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    n, pos = _decode_count(s)
    if n > max_n:
        raise TooLarge(f"n={n} exceeds the configured limit {max_n}")
    body = s[pos:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise MalformedInput(
            f"graph6 body has {len(body)} characters, expected {need} for n={n}"
        )
    values = []
    for ch in body:
        v = ord(ch) - 63
        if not 0 <= v < 64:
            raise MalformedInput(f"invalid graph6 character {ch!r}")
        values.append(v)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if values[idx // 6] & (1 << (5 - idx % 6)):
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


def dot_export(g: Graph) -> str:
    """DOT text, one line per edge in sorted order; isolated vertices kept."""
    lines = ["graph G {"]
    isolated = [v for v in range(g.n) if not g.adj[v]]
    for v in isolated:
        lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def format_roles(pairs: list[tuple[str, int]]) -> str:
    """Sidecar text for role assignments, sorted for stable output."""
    return "".join(f"{role}={v}\n" for role, v in sorted(pairs))


def parse_roles(text: str) -> list[tuple[str, int]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise MalformedInput(f"line {lineno}: expected role=vertex_id")
        role, _, value = line.partition("=")
        try:
            out.append((role.strip(), int(value)))
        except ValueError:
            raise MalformedInput(f"line {lineno}: bad vertex id {value!r}") from None
    return out


def roles_of_graph(g: Graph, extra: list[tuple[str, int]] = ()) -> list[tuple[str, int]]:
    pairs = list(g.labels.items())
    pairs.extend(extra)
    return pairs
