"""Exhaustive generation of simple graphs, one representative per
isomorphism class, by vertex augmentation with canonical dedup.

Every n-vertex class arises from some (n-1)-vertex class plus a neighborhood
mask for the new vertex, so augmenting every parent with every mask and
deduplicating is complete.  Dedup uses two rounds of neighborhood refinement:
when the refined colors are all distinct they induce a canonical relabeling
and an exact dictionary key; otherwise candidates fall into a bucket keyed by
the color signature and are compared by color-guided isomorphism search.
The discovery order is deterministic, so repeated runs produce identical
class lists.
"""

from __future__ import annotations

from .errors import GraphError
from .graphs import Graph, bits

DEFAULT_MAX_GENERATION = 9
_HARD_CAP = 11  # candidate counts get silly beyond this

_LEVELS: dict[int, list[tuple[int, ...]]] = {1: [(0,)]}
_BIT_LIST: list[tuple[int, ...]] = []


def _bit_list(n: int) -> list[tuple[int, ...]]:
    """Set-bit tuples for every mask below 2**n; generator hot path only."""
    need = 1 << n
    while len(_BIT_LIST) < need:
        m = len(_BIT_LIST)
        _BIT_LIST.append(tuple(i for i in range(n) if m >> i & 1))
    return _BIT_LIST


def _neighbor_lists(adj: tuple[int, ...]) -> list[tuple[int, ...]]:
    return [tuple(bits(row)) for row in adj]


def _refined_colors(adj: tuple[int, ...], nbrs: list[tuple[int, ...]]):
    """Two refinement rounds; returns (colors, invariant signature).

    Colors are per-graph ranks of iso-invariant structures, so isomorphic
    graphs get matching color multisets and matching signatures.
    """
    n = len(adj)
    deg = [row.bit_count() for row in adj]
    s1 = [(deg[v],) + tuple(sorted(deg[u] for u in nbrs[v])) for v in range(n)]
    rank1 = {t: i for i, t in enumerate(sorted(set(s1)))}
    r1 = [rank1[t] for t in s1]
    s2 = [(r1[v],) + tuple(sorted(r1[u] for u in nbrs[v])) for v in range(n)]
    rank2 = {t: i for i, t in enumerate(sorted(set(s2)))}
    colors = [rank2[t] for t in s2]
    return colors, tuple(sorted(s2))


def _relabel(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    n = len(adj)
    pos = [0] * n
    for new, old in enumerate(order):
        pos[old] = new
    rows = [0] * n
    for new, old in enumerate(order):
        row = adj[old]
        out = 0
        while row:
            low = row & -row
            out |= 1 << pos[low.bit_length() - 1]
            row ^= low
        rows[new] = out
    return tuple(rows)


def _isomorphic_colored(adj1, col1, adj2, col2) -> bool:
    """Backtracking isomorphism test guided by refinement colors."""
    n = len(adj1)
    groups: dict[int, list[int]] = {}
    for w, c in enumerate(col2):
        groups.setdefault(c, []).append(w)
    order = sorted(range(n), key=lambda v: (len(groups.get(col1[v], ())), col1[v], v))
    mapping = [-1] * n

    def place(idx: int, used: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        img = 0
        row = adj1[v]
        for prev in order[:idx]:
            if row >> prev & 1:
                img |= 1 << mapping[prev]
        placed_mask = 0
        for prev in order[:idx]:
            placed_mask |= 1 << mapping[prev]
        for w in groups.get(col1[v], ()):
            if used >> w & 1:
                continue
            if adj2[w] & placed_mask != img:
                continue
            mapping[v] = w
            if place(idx + 1, used | 1 << w):
                return True
            mapping[v] = -1
        return False

    return place(0, 0)


def isomorphic(g: Graph, h: Graph) -> bool:
    """Isomorphism test for desk-scale graphs."""
    if g.n != h.n or g.m != h.m:
        return False
    cg, sg = _refined_colors(g.adj, _neighbor_lists(g.adj))
    ch, sh = _refined_colors(h.adj, _neighbor_lists(h.adj))
    if sg != sh:
        return False
    return _isomorphic_colored(g.adj, cg, h.adj, ch)


def _refine_to_fixpoint(nbrs, colors: list[int]) -> list[int]:
    n = len(nbrs)
    while True:
        sig = [(colors[v],) + tuple(sorted(colors[u] for u in nbrs[v])) for v in range(n)]
        rank = {t: i for i, t in enumerate(sorted(set(sig)))}
        new = [rank[s] for s in sig]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _cells_of(colors: list[int]) -> list[list[int]]:
    groups: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        groups.setdefault(c, []).append(v)
    return [groups[c] for c in sorted(groups)]


def _is_twin_cell(adj, cell: list[int]) -> bool:
    """All members pairwise twins, so any within-cell order is equivalent."""
    for i, u in enumerate(cell):
        for v in cell[i + 1:]:
            if adj[u] & ~(1 << v) != adj[v] & ~(1 << u):
                return False
    return True


def canonical_form(g: Graph) -> tuple[int, ...]:
    """A labeling-invariant form usable as a dedup key.

    Refinement orders most graphs outright; symmetric ones go through
    individualization-refinement, with twin classes ordered by id since
    permuting twins never changes the relabeled matrix.  Intended for desk
    scale; strongly regular giants will be slow.
    """
    adj = g.adj
    nbrs = _neighbor_lists(adj)
    best: tuple[int, ...] | None = None

    def search(colors: list[int]) -> None:
        nonlocal best
        colors = _refine_to_fixpoint(nbrs, colors)
        cells = _cells_of(colors)
        target = None
        for cell in cells:
            if len(cell) > 1 and not _is_twin_cell(adj, cell):
                target = cell
                break
        if target is None:
            order = [v for cell in cells for v in cell]
            cand = _relabel(adj, order)
            if best is None or cand < best:
                best = cand
            return
        fresh = len(adj)  # unused color value
        for v in target:
            branched = list(colors)
            branched[v] = fresh
            search(branched)

    search([row.bit_count() for row in adj])
    assert best is not None
    return best


def _augment(parents: list[tuple[int, ...]], m: int) -> list[tuple[int, ...]]:
    bl = _bit_list(m)
    newbit = 1 << (m - 1)
    exact: set[tuple[int, ...]] = set()
    buckets: dict[tuple, list[tuple[tuple[int, ...], list[int]]]] = {}
    out: list[tuple[int, ...]] = []
    for parent in parents:
        base = list(parent)
        for mask in range(1 << (m - 1)):
            rows = [base[i] | newbit if mask >> i & 1 else base[i] for i in range(m - 1)]
            rows.append(mask)
            adj = tuple(rows)
            colors, sig = _refined_colors(adj, [bl[row] for row in adj])
            if len(set(colors)) == m:
                key = _relabel(adj, sorted(range(m), key=colors.__getitem__))
                if key in exact:
                    continue
                exact.add(key)
                out.append(key)
            else:
                bucket = buckets.setdefault(sig, [])
                for other_adj, other_colors in bucket:
                    if _isomorphic_colored(adj, colors, other_adj, other_colors):
                        break
                else:
                    bucket.append((adj, colors))
                    out.append(adj)
    return out


def graph_classes(n: int, max_n: int = DEFAULT_MAX_GENERATION) -> list[tuple[int, ...]]:
    """Adjacency tuples of every isomorphism class on n vertices."""
    if n < 1:
        raise GraphError("order must be positive")
    if n > max_n or n > _HARD_CAP:
        raise GraphError(
            f"built-in generation is capped at order {min(max_n, _HARD_CAP)}; "
            "ingest a graph6 corpus for larger orders"
        )
    top = max(_LEVELS)
    while top < n:
        _LEVELS[top + 1] = _augment(_LEVELS[top], top + 1)
        top += 1
    return _LEVELS[n]


def all_graphs(n: int, max_n: int = DEFAULT_MAX_GENERATION) -> list[Graph]:
    """One Graph per isomorphism class on n vertices, deterministic order."""
    return [Graph(adj) for adj in graph_classes(n, max_n)]
