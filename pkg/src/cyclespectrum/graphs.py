"""Bitset-backed simple graphs at desk scale, edit operations, named
constructions, and graph6 text I/O.

Vertices are dense ids 0..n-1 and adjacency is one int bitmask per vertex,
so set operations in the search kernels are single machine-word ops for the
orders this package targets (n <= 64).  Graph values are immutable: every
edit returns a new value, which makes them safe to share between worker
processes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import Graph6Error, GraphError

MAX_VERTICES = 64
GRAPH6_MAX_VERTICES = 62

_G6_HEADER = ">>graph6<<"


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1.

    ``adj[v]`` is the neighbor bitmask of v.  ``labels`` optionally tags
    vertices with display strings; contraction uses it to track
    super-vertices.
    """

    adj: tuple[int, ...]
    labels: tuple[tuple[int, str], ...] = ()

    def __post_init__(self):
        n = len(self.adj)
        if n == 0:
            raise GraphError("a graph needs at least one vertex")
        if n > MAX_VERTICES:
            raise GraphError(f"at most {MAX_VERTICES} vertices supported, got {n}")
        full = (1 << n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"adjacency row of {v} mentions vertices >= {n}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric between {u} and {v}")
        for v, _tag in self.labels:
            if not 0 <= v < n:
                raise GraphError(f"label attached to unknown vertex {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop ({u},{v}) rejected")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(tuple(rows))

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self.adj) // 2

    def vertices(self) -> range:
        return range(len(self.adj))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def min_degree(self) -> int:
        return min(row.bit_count() for row in self.adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return tuple(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self.adj):
            for v in bits(row):
                if v > u:
                    yield (u, v)

    def label_of(self, v: int) -> str | None:
        for u, tag in self.labels:
            if u == v:
                return tag
        return None

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < len(self.adj):
            raise GraphError(f"vertex {v} out of range 0..{len(self.adj) - 1}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _vertex_mask(g: Graph, s: Iterable[int]) -> int:
    mask = 0
    for v in s:
        g._check_vertex(v)
        mask |= 1 << v
    return mask


def neighborhood(g: Graph, s: Iterable[int], closed: bool = False) -> frozenset[int]:
    """Open neighborhood of the vertex set s, or closed if requested."""
    smask = _vertex_mask(g, s)
    out = 0
    for v in bits(smask):
        out |= g.adj[v]
    if closed:
        out |= smask
    else:
        out &= ~smask
    return frozenset(bits(out))


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by s, plus the id map (new id -> original id)."""
    smask = _vertex_mask(g, s)
    if smask == 0:
        raise GraphError("induced subgraph of the empty set is not defined")
    keep = tuple(bits(smask))
    index = {old: new for new, old in enumerate(keep)}
    rows = []
    for old in keep:
        row = 0
        for u in bits(g.adj[old] & smask):
            row |= 1 << index[u]
        rows.append(row)
    labels = tuple((index[v], tag) for v, tag in g.labels if v in index)
    return Graph(tuple(rows), labels), keep


def contraction_map(g: Graph, s: Iterable[int]) -> dict[int, int]:
    """Old id -> new id mapping used by :func:`contract`.

    Every vertex of s maps to the contracted vertex, which is the last id
    of the result; survivors keep their relative order.
    """
    smask = _vertex_mask(g, s)
    if smask == 0:
        raise GraphError("cannot contract the empty set")
    survivors = [v for v in g.vertices() if not smask >> v & 1]
    if not survivors:
        raise GraphError("cannot contract the whole vertex set")
    mapping = {old: new for new, old in enumerate(survivors)}
    new_vertex = len(survivors)
    for v in bits(smask):
        mapping[v] = new_vertex
    return mapping


def contract(g: Graph, s: Iterable[int], tag: str = "*") -> Graph:
    """Contract the vertex set s to a single tagged vertex.

    The contracted vertex becomes the highest id of the result and is
    adjacent exactly to the open neighborhood of s; parallel edges collapse
    and loops are dropped, so the result is again simple.
    """
    smask = _vertex_mask(g, s)
    mapping = contraction_map(g, s)
    new_vertex = len(g.adj) - smask.bit_count()
    rows = [0] * (new_vertex + 1)
    for u, v in g.edges():
        nu, nv = mapping[u], mapping[v]
        if nu == nv:
            continue
        rows[nu] |= 1 << nv
        rows[nv] |= 1 << nu
    labels = [(mapping[v], t) for v, t in g.labels if not smask >> v & 1]
    labels.append((new_vertex, tag))
    return Graph(tuple(rows), tuple(labels))


def with_edge(g: Graph, u: int, v: int) -> Graph:
    """g plus the edge uv; returns g unchanged when the edge is present."""
    if u == v:
        raise GraphError("cannot add a loop")
    g._check_vertex(u)
    g._check_vertex(v)
    if g.adj[u] >> v & 1:
        return g
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(tuple(rows), g.labels)


def without_edge(g: Graph, u: int, v: int) -> Graph:
    """g minus the edge uv; returns g unchanged when the edge is absent."""
    if u == v:
        raise GraphError("no loops to remove")
    g._check_vertex(u)
    g._check_vertex(v)
    if not g.adj[u] >> v & 1:
        return g
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(tuple(rows), g.labels)


# ---------------------------------------------------------------------------
# named constructions


def empty_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("order must be positive")
    return Graph((0,) * n)


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("order must be positive")
    full = (1 << n) - 1
    return Graph(tuple(full ^ (1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("order must be positive")
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def complete_bipartite(s: int, t: int) -> Graph:
    if s < 1 or t < 1:
        raise GraphError("both sides must be nonempty")
    return Graph.from_edges(s + t, [(a, s + b) for a in range(s) for b in range(t)])


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    off = g.n
    rows = list(g.adj) + [row << off for row in h.adj]
    labels = g.labels + tuple((v + off, t) for v, t in h.labels)
    return Graph(tuple(rows), labels)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two sides."""
    off = g.n
    gmask = (1 << off) - 1
    hmask = ((1 << h.n) - 1) << off
    base = disjoint_union(g, h)
    rows = [row | (hmask if v < off else gmask) for v, row in enumerate(base.adj)]
    return Graph(tuple(rows), base.labels)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(tuple((full ^ row ^ (1 << v)) for v, row in enumerate(g.adj)))


_TOKEN = re.compile(r"[A-Za-z]+|\d+|[(),]")


def named_graph(expr: str) -> Graph:
    """Build a graph from a small expression language.

    Atoms: ``petersen``, ``K5``/``K(5)``, ``K(3,3)``, ``C5``, ``E5`` (the
    edgeless graph).  Combinators: ``join(a,b)``, ``union(a,b)`` (disjoint
    union), ``complement(a)``.  Case-insensitive, whitespace ignored.
    """
    tokens = _TOKEN.findall(expr)
    if "".join(tokens) != re.sub(r"\s+", "", expr):
        raise GraphError(f"cannot tokenize graph expression {expr!r}")
    pos = 0

    def peek() -> str | None:
        return tokens[pos] if pos < len(tokens) else None

    def take(expected: str | None = None) -> str:
        nonlocal pos
        if pos >= len(tokens):
            raise GraphError(f"graph expression ended early: {expr!r}")
        tok = tokens[pos]
        if expected is not None and tok != expected:
            raise GraphError(f"expected {expected!r} but found {tok!r} in {expr!r}")
        pos += 1
        return tok

    def take_int() -> int:
        tok = take()
        if not tok.isdigit():
            raise GraphError(f"expected a number but found {tok!r} in {expr!r}")
        return int(tok)

    def parse() -> Graph:
        name = take().lower()
        if name == "petersen":
            return petersen()
        if name in ("join", "union"):
            take("(")
            a = parse()
            take(",")
            b = parse()
            take(")")
            return join(a, b) if name == "join" else disjoint_union(a, b)
        if name == "complement":
            take("(")
            a = parse()
            take(")")
            return complement(a)
        if name in ("k", "c", "e"):
            if peek() == "(":
                take("(")
                first = take_int()
                if name == "k" and peek() == ",":
                    take(",")
                    second = take_int()
                    take(")")
                    return complete_bipartite(first, second)
                take(")")
            else:
                first = take_int()
            if name == "k":
                return complete(first)
            if name == "c":
                return cycle_graph(first)
            return empty_graph(first)
        raise GraphError(f"unknown construction {name!r} in {expr!r}")

    g = parse()
    if pos != len(tokens):
        raise GraphError(f"trailing junk after graph expression: {expr!r}")
    return g


# ---------------------------------------------------------------------------
# graph6


def parse_graph6(text: str) -> Graph:
    """Parse one line of graph6 (short form, n <= 62, optional header)."""
    line = text.rstrip("\r\n")
    base = 0
    if line.startswith(_G6_HEADER):
        line = line[len(_G6_HEADER):]
        base = len(_G6_HEADER)
    if not line:
        raise Graph6Error("empty graph6 line", base)
    first = ord(line[0])
    if first == 126:
        raise Graph6Error("long-form graph6 (n > 62) not supported", base)
    if not 63 <= first <= 125:
        raise Graph6Error(f"bad size character {line[0]!r}", base)
    n = first - 63
    if n == 0:
        raise Graph6Error("zero-vertex graph6 not supported", base)
    need_bits = n * (n - 1) // 2
    need_chars = (need_bits + 5) // 6
    data = line[1:]
    if len(data) != need_chars:
        raise Graph6Error(
            f"expected {need_chars} data characters for n={n}, got {len(data)}",
            base + 1 + min(len(data), need_chars),
        )
    pairs = [(u, v) for v in range(1, n) for u in range(v)]
    rows = [0] * n
    k = 0
    for i, ch in enumerate(data):
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise Graph6Error(f"bad data character {ch!r}", base + 1 + i)
        for shift in range(5, -1, -1):
            bit = val >> shift & 1
            if k < need_bits:
                if bit:
                    u, v = pairs[k]
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
            elif bit:
                raise Graph6Error("nonzero padding bits", base + 1 + i)
            k += 1
    return Graph(tuple(rows))


def emit_graph6(g: Graph) -> str:
    """Encode g as a newline-terminated graph6 line (no header)."""
    n = g.n
    if n > GRAPH6_MAX_VERTICES:
        raise GraphError(f"graph6 short form is capped at {GRAPH6_MAX_VERTICES} vertices")
    out = [chr(63 + n)]
    acc = 0
    nbits = 0
    for v in range(1, n):
        col = g.adj[v]
        for u in range(v):
            acc = acc << 1 | (col >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out) + "\n"
