"""Connectivity, bipartiteness, triangle checks, block-cutvertex
decomposition, and rooted-graph predicates.

Everything here is a pure function over immutable graphs.  Verdicts carry
witnesses: a 2-coloring or an odd cycle for bipartiteness, a separator for
failed connectivity, the triangle itself for triangle-freeness.
"""

from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import GraphError
from .graphs import Graph, bits, with_edge


def _reach_mask(adj: tuple[int, ...], start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from start inside allowed."""
    reach = 1 << start
    frontier = reach
    while frontier:
        grow = 0
        for v in bits(frontier):
            grow |= adj[v]
        frontier = grow & allowed & ~reach
        reach |= frontier
    return reach


def _is_connected_mask(adj: tuple[int, ...], allowed: int) -> bool:
    if allowed == 0:
        return False
    start = (allowed & -allowed).bit_length() - 1
    return _reach_mask(adj, start, allowed) == allowed


def is_connected(g: Graph) -> bool:
    return _is_connected_mask(g.adj, (1 << g.n) - 1)


def connected_components(g: Graph) -> list[frozenset[int]]:
    remaining = (1 << g.n) - 1
    out = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = _reach_mask(g.adj, start, remaining)
        out.append(frozenset(bits(comp)))
        remaining &= ~comp
    return out


@dataclass(frozen=True)
class BipartiteReport:
    """Verdict plus witness: a proper 2-coloring, or an odd cycle."""

    bipartite: bool
    coloring: tuple[int, ...] | None
    odd_cycle: tuple[int, ...] | None


def is_bipartite(g: Graph) -> BipartiteReport:
    n = g.n
    color = [-1] * n
    parent = [-1] * n
    depth = [0] * n
    for s in range(n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in bits(g.adj[v]):
                if color[u] == -1:
                    color[u] = color[v] ^ 1
                    parent[u] = v
                    depth[u] = depth[v] + 1
                    queue.append(u)
                elif color[u] == color[v]:
                    return BipartiteReport(False, None, _odd_cycle(parent, depth, v, u))
    return BipartiteReport(True, tuple(color), None)


def _odd_cycle(parent: list[int], depth: list[int], a: int, b: int) -> tuple[int, ...]:
    left, right = [], []
    while depth[a] > depth[b]:
        left.append(a)
        a = parent[a]
    while depth[b] > depth[a]:
        right.append(b)
        b = parent[b]
    while a != b:
        left.append(a)
        right.append(b)
        a = parent[a]
        b = parent[b]
    return tuple(left + [a] + right[::-1])


def find_triangle(g: Graph) -> tuple[int, int, int] | None:
    for u in range(g.n):
        above_u = (g.adj[u] >> (u + 1)) << (u + 1)
        for v in bits(above_u):
            common = g.adj[u] & ((g.adj[v] >> (v + 1)) << (v + 1))
            if common:
                w = (common & -common).bit_length() - 1
                return (u, v, w)
    return None


def is_triangle_free(g: Graph) -> bool:
    return find_triangle(g) is None


@dataclass(frozen=True)
class ConnectivityReport:
    holds: bool
    separator: tuple[int, ...] | None


def connectivity_at_least(g: Graph, k: int) -> ConnectivityReport:
    """Exhaustive small-separator check for k in 1..3.

    Negative verdicts carry a minimum-size cut, found by trying separator
    sizes in increasing order.
    """
    if k not in (1, 2, 3):
        raise GraphError(f"connectivity check supports k in 1..3, got {k}")
    if g.n <= k:
        raise GraphError(f"connectivity >= {k} is undefined at order {g.n}")
    full = (1 << g.n) - 1
    for size in range(k):
        for cut in combinations(range(g.n), size):
            mask = 0
            for v in cut:
                mask |= 1 << v
            if not _is_connected_mask(g.adj, full & ~mask):
                return ConnectivityReport(False, cut)
    return ConnectivityReport(True, None)


def _blocks_and_cuts(g: Graph) -> tuple[list[frozenset[int]], set[int]]:
    """Lowpoint DFS block decomposition.  Works per component.

    Recursion depth is bounded by the order, which the Graph type caps, so
    the recursive formulation is safe.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks: list[frozenset[int]] = []
    cuts: set[int] = set()
    stack: list[tuple[int, int]] = []
    counter = 0

    def rec(v: int, parent: int) -> None:
        nonlocal counter
        disc[v] = low[v] = counter
        counter += 1
        children = 0
        skipped_parent = False
        for u in bits(g.adj[v]):
            if u == parent and not skipped_parent:
                skipped_parent = True
                continue
            if disc[u] == -1:
                children += 1
                stack.append((v, u))
                rec(u, v)
                low[v] = min(low[v], low[u])
                if (parent == -1 and children > 1) or (parent != -1 and low[u] >= disc[v]):
                    cuts.add(v)
                if low[u] >= disc[v]:
                    members: set[int] = set()
                    while True:
                        e = stack.pop()
                        members.update(e)
                        if e == (v, u):
                            break
                    blocks.append(frozenset(members))
            elif disc[u] < disc[v]:
                stack.append((v, u))
                low[v] = min(low[v], disc[u])

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 4 * n + 100))
    try:
        for s in range(n):
            if disc[s] == -1:
                rec(s, -1)
                if stack:  # single-block component leftovers
                    members = set()
                    while stack:
                        members.update(stack.pop())
                    blocks.append(frozenset(members))
                if g.adj[s] == 0:
                    blocks.append(frozenset({s}))
    finally:
        sys.setrecursionlimit(old_limit)
    return blocks, cuts


def articulation_points(g: Graph) -> frozenset[int]:
    return frozenset(_blocks_and_cuts(g)[1])


def is_biconnected(g: Graph) -> bool:
    """2-connected: order >= 3, connected, no cut vertex."""
    if g.n < 3:
        return False
    if not is_connected(g):
        return False
    return not _blocks_and_cuts(g)[1]


@dataclass(frozen=True)
class BlockTree:
    """Blocks, cut vertices, end-blocks, and block-cut tree incidences.

    ``end_blocks`` pairs each leaf block with its unique cut vertex; it is
    empty when the graph has no cut vertex (a single block is its own tree).
    ``tree_edges`` are (block index, cut vertex) incidences.
    """

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    end_blocks: tuple[tuple[int, int], ...]
    tree_edges: tuple[tuple[int, int], ...]


def block_cutvertex_tree(g: Graph) -> BlockTree:
    if not is_connected(g):
        k = len(connected_components(g))
        raise GraphError(f"block decomposition needs a connected graph, got {k} components")
    blocks, cuts = _blocks_and_cuts(g)
    blocks = sorted(blocks, key=sorted)
    tree_edges = []
    end_blocks = []
    for i, blk in enumerate(blocks):
        inside = sorted(blk & cuts)
        for c in inside:
            tree_edges.append((i, c))
        if cuts and len(inside) == 1:
            end_blocks.append((i, inside[0]))
    return BlockTree(tuple(blocks), frozenset(cuts), tuple(end_blocks), tuple(tree_edges))


@dataclass(frozen=True)
class RootedGraph:
    """A graph with an ordered pair of distinct root vertices."""

    g: Graph
    x: int
    y: int

    def __post_init__(self):
        self.g._check_vertex(self.x)
        self.g._check_vertex(self.y)
        if self.x == self.y:
            raise GraphError("roots must be distinct")


def rooted_is_2_connected(r: RootedGraph) -> bool:
    """Whether the graph becomes 2-connected once the root edge is added."""
    if r.g.n < 3:
        raise GraphError("rooted 2-connectivity needs order >= 3")
    return is_biconnected(with_edge(r.g, r.x, r.y))


def rooted_min_degree(r: RootedGraph) -> int:
    """Minimum degree over the non-root vertices."""
    if r.g.n < 3:
        raise GraphError("no non-root vertices at order 2")
    skip = (1 << r.x) | (1 << r.y)
    return min(row.bit_count() for v, row in enumerate(r.g.adj) if not skip >> v & 1)
