"""Root-to-root path families: the arithmetic-progression ("nice") and
stepped-triple ("good") predicates, certified-search finders for them, and a
brute-force enumeration oracle.

A pair or triple finder works by exhaustive per-length path search in
increasing length order, returning the first qualifying family and
re-validating it in the original graph.  On inputs satisfying the checked
hypotheses a family always exists, so the searches terminate early; coming
up empty raises ContradictionError instead of returning quietly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import ContradictionError, GraphError, HypothesisError
from .graphs import (
    Graph,
    bits,
    contract,
    contraction_map,
    emit_graph6,
    induced_subgraph,
    with_edge,
    without_edge,
)
from .structure import (
    RootedGraph,
    _reach_mask,
    block_cutvertex_tree,
    is_biconnected,
    rooted_is_2_connected,
    rooted_min_degree,
)


def validate_path(g: Graph, seq: tuple[int, ...], x: int | None = None, y: int | None = None) -> None:
    """Raise GraphError unless seq is a simple path (optionally from x to y)."""
    if len(seq) < 2:
        raise GraphError("a path needs at least one edge")
    if len(set(seq)) != len(seq):
        raise GraphError(f"repeated vertex in path {seq}")
    for v in seq:
        g._check_vertex(v)
    for a, b in zip(seq, seq[1:]):
        if not g.adj[a] >> b & 1:
            raise GraphError(f"path step {a}-{b} is not an edge")
    if x is not None and seq[0] != x:
        raise GraphError(f"path starts at {seq[0]}, expected {x}")
    if y is not None and seq[-1] != y:
        raise GraphError(f"path ends at {seq[-1]}, expected {y}")


def _common_endpoints(paths) -> tuple[int, int]:
    ends = {frozenset((p[0], p[-1])) for p in paths}
    if len(ends) != 1:
        raise GraphError("paths do not share a common endpoint pair")
    pair = ends.pop()
    if len(pair) != 1:
        a, b = sorted(pair)
        return a, b
    raise GraphError("degenerate endpoint pair")


def is_nice(paths) -> bool:
    """Lengths form an arithmetic progression, first term >= 2, step 2."""
    paths = [tuple(p) for p in paths]
    if not paths:
        raise GraphError("empty path family")
    _common_endpoints(paths)
    lengths = sorted(len(p) - 1 for p in paths)
    if lengths[0] < 2:
        return False
    return all(b - a == 2 for a, b in zip(lengths, lengths[1:]))


def _good_lengths(a: int, b: int, c: int) -> bool:
    """a < b < c with a >= 2, progression step 2 or difference multiset {1,2}."""
    if not (2 <= a < b < c):
        return False
    d1, d2 = b - a, c - b
    return (d1 == d2 == 2) or {d1, d2} == {1, 2}


def is_good_triple(p1, p2, p3) -> bool:
    """Order-insensitive check of the good-triple length condition."""
    paths = [tuple(p1), tuple(p2), tuple(p3)]
    _common_endpoints(paths)
    a, b, c = sorted(len(p) - 1 for p in paths)
    return _good_lengths(a, b, c)


@dataclass(frozen=True)
class PathFamily:
    """Paths sharing an endpoint pair, shortest first, with the family kind."""

    paths: tuple[tuple[int, ...], ...]
    kind: str  # "nice" | "good"

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(p) - 1 for p in self.paths)


def find_xy_path_of_length(g: Graph, x: int, y: int, length: int) -> tuple[int, ...] | None:
    """First x..y path of exactly this many edges, ascending-neighbor order."""
    g._check_vertex(x)
    g._check_vertex(y)
    if x == y:
        raise GraphError("path endpoints must be distinct")
    if length < 1 or length > g.n - 1:
        return None
    adj = g.adj
    dist = _bfs_dist(adj, y)
    if dist[x] > length:
        return None
    path = [x]

    def extend(used: int, depth: int) -> bool:
        v = path[-1]
        remaining = length - depth
        if remaining == 0:
            return v == y
        for u in bits(adj[v] & ~used):
            if u == y and remaining > 1:
                continue
            if dist[u] > remaining:
                continue
            path.append(u)
            if extend(used | 1 << u, depth + 1):
                return True
            path.pop()
        return False

    if extend(1 << x, 0):
        return tuple(path)
    return None


def _bfs_dist(adj: tuple[int, ...], source: int) -> list[int]:
    n = len(adj)
    inf = n + 1
    dist = [inf] * n
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        grow = 0
        for v in bits(frontier):
            grow |= adj[v]
        frontier = grow & ~seen
        seen |= frontier
        d += 1
        for v in bits(frontier):
            dist[v] = d
    return dist


def enumerate_xy_path_lengths(
    g: Graph, x: int, y: int, cap: int = 12
) -> dict[int, tuple[int, ...]]:
    """Exact set of x..y path lengths with one witness each, by exhaustive
    backtracking over every simple path.  This is the oracle the certified
    finders are checked against, so it stays deliberately naive."""
    g._check_vertex(x)
    g._check_vertex(y)
    if x == y:
        raise GraphError("path endpoints must be distinct")
    if g.n > cap:
        raise GraphError(f"path-length oracle refused at order {g.n} (cap {cap})")
    adj = g.adj
    out: dict[int, tuple[int, ...]] = {}
    path = [x]

    def walk(used: int) -> None:
        v = path[-1]
        for u in bits(adj[v] & ~used):
            path.append(u)
            if u == y:
                out.setdefault(len(path) - 1, tuple(path))
            else:
                walk(used | 1 << u)
            path.pop()

    walk(1 << x)
    return out


# ---------------------------------------------------------------------------
# hypothesis machinery


def _hits_all_triangles(g: Graph) -> tuple[bool, int]:
    """(graph has a triangle, bitmask of vertices meeting every triangle)."""
    full = (1 << g.n) - 1
    inter = full
    has_tri = False
    for u in range(g.n):
        above_u = (g.adj[u] >> (u + 1)) << (u + 1)
        for v in bits(above_u):
            common = g.adj[u] & ((g.adj[v] >> (v + 1)) << (v + 1))
            for w in bits(common):
                has_tri = True
                inter &= (1 << u) | (1 << v) | (1 << w)
                if inter == 0:
                    return True, 0
    return has_tri, inter if has_tri else full


def check_pair_hypotheses(r: RootedGraph, min_deg: int) -> None:
    """Raise HypothesisError naming whichever requirement fails.

    Requirements: the graph minus the first root is triangle-free, the
    rooted pair is 2-connected, and every non-root vertex has degree at
    least min_deg.
    """
    g, x = r.g, r.x
    if g.n < 3:
        raise HypothesisError("rooted hypotheses need order >= 3")
    has_tri, inter = _hits_all_triangles(g)
    if has_tri and not inter >> x & 1:
        raise HypothesisError(f"graph minus root {x} is not triangle-free")
    md = rooted_min_degree(r)
    if md < min_deg:
        raise HypothesisError(f"rooted minimum degree {md} < {min_deg}")
    if not rooted_is_2_connected(r):
        raise HypothesisError("rooted pair is not 2-connected")


def qualifying_root_pairs(g: Graph, min_deg: int) -> Iterator[tuple[int, int]]:
    """Ordered root pairs (x, y) satisfying the pair hypotheses at min_deg.

    Cheap rejections first: more than two vertices below min_deg kill the
    graph outright, and the first root must meet every triangle.
    """
    n = g.n
    if n < 3:
        return
    degs = [row.bit_count() for row in g.adj]
    low = [v for v in range(n) if degs[v] < min_deg]
    if len(low) > 2:
        return
    has_tri, inter = _hits_all_triangles(g)
    x_candidates = bits(inter) if has_tri else range(n)
    for x in x_candidates:
        for y in range(n):
            if y == x:
                continue
            if any(v != x and v != y for v in low):
                continue
            r = RootedGraph(g, x, y)
            if rooted_is_2_connected(r):
                yield (x, y)


# ---------------------------------------------------------------------------
# certified-search finders


def _realized_lengths_ascending(g: Graph, x: int, y: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    for length in range(2, g.n):
        w = find_xy_path_of_length(g, x, y, length)
        if w is not None:
            yield length, w


def two_nice_paths(r: RootedGraph) -> PathFamily:
    """Two root-to-root paths whose lengths are L and L+2 with L >= 2.

    Hypotheses are checked up front; the root edge, if present, is ignored
    during the search (paths of length >= 2 cannot use it anyway) and the
    result re-validates against the original graph.
    """
    check_pair_hypotheses(r, 3)
    g, x, y = r.g, r.x, r.y
    search = without_edge(g, x, y)
    realized: dict[int, tuple[int, ...]] = {}
    for length, witness in _realized_lengths_ascending(search, x, y):
        realized[length] = witness
        if length - 2 in realized:
            pair = (realized[length - 2], witness)
            for p in pair:
                validate_path(g, p, x, y)
            return PathFamily(pair, "nice")
    raise ContradictionError(
        "no nice pair found although the rooted hypotheses guarantee one "
        f"(graph6: {emit_graph6(g).strip()}, roots {x},{y})"
    )


def three_good_paths(r: RootedGraph) -> PathFamily:
    """Three root-to-root paths forming a good triple (see is_good_triple)."""
    check_pair_hypotheses(r, 4)
    g, x, y = r.g, r.x, r.y
    search = without_edge(g, x, y)
    realized: dict[int, tuple[int, ...]] = {}
    for length, witness in _realized_lengths_ascending(search, x, y):
        realized[length] = witness
        have = sorted(realized)
        for i, a in enumerate(have):
            for b in have[i + 1:]:
                if b < length and _good_lengths(a, b, length):
                    triple = (realized[a], realized[b], witness)
                    for p in triple:
                        validate_path(g, p, x, y)
                    return PathFamily(triple, "good")
    raise ContradictionError(
        "no good triple found although the rooted hypotheses guarantee one "
        f"(graph6: {emit_graph6(g).strip()}, roots {x},{y})"
    )


# ---------------------------------------------------------------------------
# trace mode: didactic log of the recursive argument behind the nice-pair
# guarantee.  Informational only; the finder above never consults it.

_TRACE_DEPTH_CAP = 16


def trace_nice_path_search(r: RootedGraph) -> list[str]:
    """Log which structural case a recursive nice-pair argument would take.

    The output format ("case=... vertex=...") is informational and not a
    stable interface.
    """
    lines: list[str] = []
    _trace(r, lines, 0)
    return lines


def _trace(r: RootedGraph, lines: list[str], depth: int) -> None:
    try:
        _trace_step(r, lines, depth)
    except GraphError as exc:  # never let the didactic walk take anyone down
        lines.append(f"depth={depth} case=stop reason=internal:{exc}")


def _trace_step(r: RootedGraph, lines: list[str], depth: int) -> None:
    pre = f"depth={depth}"
    if depth > _TRACE_DEPTH_CAP:
        lines.append(f"{pre} case=stop reason=depth-cap")
        return
    try:
        check_pair_hypotheses(r, 3)
    except HypothesisError as exc:
        lines.append(f"{pre} case=stop reason={exc}")
        return
    g, x, y = r.g, r.x, r.y
    if g.has_edge(x, y):
        lines.append(f"{pre} case=drop-root-edge")
        g = without_edge(g, x, y)
    if g.n == 5:
        lines.append(f"{pre} case=base order=5")
        return

    four = _four_cycle_through(g, x, y)
    if four is not None:
        x1, a, x2 = four
        cyc_mask = (1 << x) | (1 << x1) | (1 << a) | (1 << x2)
        comp = next(c for c in connected_components_masked(g, ~cyc_mask) if y in c)
        comp_mask = 0
        for v in comp:
            comp_mask |= 1 << v
        if (g.adj[x1] | g.adj[x2]) & comp_mask:
            lines.append(f"{pre} case=1.1 cycle={x},{x1},{a},{x2}")
            return
        lines.append(f"{pre} case=1.2 cycle={x},{x1},{a},{x2} recurse-root={a}")
        keep = [v for v in g.vertices() if not comp_mask >> v & 1]
        sub, idmap = induced_subgraph(g, keep)
        back = {old: new for new, old in enumerate(idmap)}
        _trace(RootedGraph(sub, back[x], back[a]), lines, depth + 1)
        return

    # no 4-cycle through x: contract its neighborhood
    X = g.adj[x]
    keep = [v for v in g.vertices() if v != x]
    gx, idmap = induced_subgraph(g, keep)
    back = {old: new for new, old in enumerate(idmap)}
    x_set = [back[v] for v in bits(X)]
    cmap = contraction_map(gx, x_set)
    gstar = contract(gx, x_set, "x*")
    xstar = cmap[x_set[0]]
    y_new = cmap[back[y]]
    h = with_edge(gstar, xstar, y_new)
    if is_biconnected(h):
        block = frozenset(h.vertices())
    else:
        bt = block_cutvertex_tree(h)
        block = next(b for b in bt.blocks if xstar in b and y_new in b)
    if len(block) >= 3:
        lines.append(f"{pre} case=2.descend block-order={len(block)} contraction=N(x)")
        sub, sub_map = induced_subgraph(h, sorted(block))
        sub_back = {old: new for new, old in enumerate(sub_map)}
        _trace(RootedGraph(sub, sub_back[xstar], sub_back[y_new]), lines, depth + 1)
        return

    # the block is the single edge x*y: all neighbors of y lie in N(x)
    outside_mask = ((1 << g.n) - 1) & ~(X | (1 << x) | (1 << y))
    adj_outside = [v for v in bits(g.adj[y]) if g.adj[v] & outside_mask]
    if adj_outside:
        yprime = adj_outside[0]
        lines.append(f"{pre} case=2.1 vertex={yprime} contraction=N(x)-minus-{yprime}")
        _trace_contracted_side(g, x, y, X, yprime, lines, depth)
        return
    ystar = min(bits(g.adj[y]))
    y1_choices = [v for v in bits(g.adj[ystar]) if v not in (x, y)]
    if not y1_choices:
        lines.append(f"{pre} case=stop reason=no-second-neighbor")
        return
    y1 = y1_choices[0]
    if g.adj[y1] & X & ~(1 << ystar):
        lines.append(f"{pre} case=2.2-direct vertex={ystar}")
        return
    lines.append(f"{pre} case=2.2 vertex={ystar} recurse-root={y1}")
    _trace_contracted_side(g, x, y, X, y1, lines, depth)


def _trace_contracted_side(
    g: Graph, x: int, y: int, X: int, hub: int, lines: list[str], depth: int
) -> None:
    """Shared tail of trace cases 2.1/2.2: contract N(x) minus the hub over
    the component the hub leans on, then recurse."""
    outside_mask = ((1 << g.n) - 1) & ~X & ~(1 << x) & ~(1 << y)
    comp_vertices = None
    for comp in connected_components_masked(g, outside_mask):
        pick = [v for v in comp if g.adj[hub] >> v & 1]
        if pick:
            comp_vertices = comp
            break
    if comp_vertices is None:
        lines.append(f"depth={depth} case=stop reason=no-attached-component")
        return
    keep = sorted(set(bits(X)) | set(comp_vertices))
    sub, idmap = induced_subgraph(g, keep)
    back = {old: new for new, old in enumerate(idmap)}
    rest = [back[v] for v in bits(X) if v != hub]
    if not rest:
        lines.append(f"depth={depth} case=stop reason=nothing-to-contract")
        return
    cmap = contraction_map(sub, rest)
    g1 = contract(sub, rest, "w")
    _trace(RootedGraph(g1, cmap[rest[0]], cmap[back[hub]]), lines, depth + 1)


def connected_components_masked(g: Graph, allowed_mask: int) -> list[list[int]]:
    allowed_mask &= (1 << g.n) - 1
    out = []
    remaining = allowed_mask
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = _reach_mask(g.adj, start, remaining)
        out.append(sorted(bits(comp)))
        remaining &= ~comp
    return out


def _four_cycle_through(g: Graph, x: int, y: int) -> tuple[int, int, int] | None:
    """Least (x1, a, x2) with x-x1-a-x2-x a 4-cycle avoiding y, if any."""
    nx = [v for v in bits(g.adj[x]) if v != y]
    for i, x1 in enumerate(nx):
        for x2 in nx[i + 1:]:
            common = g.adj[x1] & g.adj[x2] & ~(1 << x) & ~(1 << y)
            for a in bits(common):
                return (x1, a, x2)
    return None
