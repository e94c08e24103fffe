"""Exact cycle spectra, consecutive-length runs, and the search for
non-separating induced odd cycles.

The kernels are per-length backtracking searches over bitset adjacency with
early exit, so every positive answer comes with a validated witness and
every enumeration is deterministic: cycles are produced shortest first and,
within a length, by lexicographically least vertex sequence (anchored at
their minimum vertex, direction fixed by second < last).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import ContradictionError, GraphError, HypothesisError
from .graphs import Graph, bits, emit_graph6, induced_subgraph
from .structure import (
    _is_connected_mask,
    articulation_points,
    connectivity_at_least,
    is_bipartite,
)

DEFAULT_SPECTRUM_CAP = 16


def validate_cycle(g: Graph, seq: tuple[int, ...]) -> None:
    """Raise GraphError unless seq is a cycle of g (length = len(seq) >= 3)."""
    if len(seq) < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {len(seq)}")
    if len(set(seq)) != len(seq):
        raise GraphError(f"repeated vertex in cycle {seq}")
    for v in seq:
        g._check_vertex(v)
    for a, b in zip(seq, seq[1:] + seq[:1]):
        if not g.adj[a] >> b & 1:
            raise GraphError(f"cycle step {a}-{b} is not an edge")


def is_valid_cycle(g: Graph, seq: tuple[int, ...]) -> bool:
    try:
        validate_cycle(g, seq)
    except GraphError:
        return False
    return True


def find_cycle_of_length(g: Graph, length: int) -> tuple[int, ...] | None:
    """First cycle of exactly this length in canonical order, or None."""
    if length < 3:
        raise GraphError(f"cycle length must be >= 3, got {length}")
    n = g.n
    if length > n:
        return None
    adj = g.adj
    path = [0]

    def extend(used: int, above: int, depth: int) -> bool:
        v = path[-1]
        if depth == length - 1:
            anchor = path[0]
            for w in bits(adj[v] & adj[anchor] & above & ~used):
                if path[1] < w:
                    path.append(w)
                    return True
            return False
        if (above & ~used).bit_count() < length - depth:
            return False
        for w in bits(adj[v] & above & ~used):
            path.append(w)
            if extend(used | 1 << w, above, depth + 1):
                return True
            path.pop()
        return False

    for a in range(n - length + 1):
        above = ~((1 << (a + 1)) - 1) & ((1 << n) - 1)
        path[:] = [a]
        if extend(1 << a, above, 1):
            return tuple(path)
    return None


@dataclass(frozen=True)
class SpectrumReport:
    """Realized cycle lengths, one witness per length, best consecutive run."""

    lengths: frozenset[int]
    witnesses: dict[int, tuple[int, ...]]
    best_run: tuple[int, int]  # (start length, run length); (0, 0) if acyclic

    def to_json_dict(self) -> dict:
        return {
            "lengths": sorted(self.lengths),
            "best_run": {"start": self.best_run[0], "len": self.best_run[1]},
            "witnesses": {str(k): list(v) for k, v in sorted(self.witnesses.items())},
        }


def _best_run(lengths: frozenset[int]) -> tuple[int, int]:
    best = (0, 0)
    for start in sorted(lengths):
        if start - 1 in lengths:
            continue
        run = 1
        while start + run in lengths:
            run += 1
        if run > best[1]:
            best = (start, run)
    return best


def cycle_spectrum(g: Graph, cap: int = DEFAULT_SPECTRUM_CAP) -> SpectrumReport:
    """Exact spectrum by per-length search; refuses orders above cap."""
    if g.n > cap:
        raise GraphError(
            f"exact spectrum refused at order {g.n} (cap {cap}); "
            "raise the cap explicitly if you accept the cost"
        )
    witnesses: dict[int, tuple[int, ...]] = {}
    for length in range(3, g.n + 1):
        w = find_cycle_of_length(g, length)
        if w is not None:
            validate_cycle(g, w)
            witnesses[length] = w
    lengths = frozenset(witnesses)
    return SpectrumReport(lengths, witnesses, _best_run(lengths))


@dataclass(frozen=True)
class ConsecutiveCycles:
    """k cycles of consecutive lengths start, start+1, ..."""

    start: int
    cycles: tuple[tuple[int, ...], ...]


def has_k_consecutive(g: Graph, k: int) -> ConsecutiveCycles | None:
    """Search lengths upward until k consecutive realized lengths appear."""
    if k < 1:
        raise GraphError(f"k must be positive, got {k}")
    found: dict[int, tuple[int, ...]] = {}
    run_start = None
    for length in range(3, g.n + 1):
        w = find_cycle_of_length(g, length)
        if w is None:
            run_start = None
            continue
        found[length] = w
        if run_start is None:
            run_start = length
        if length - run_start + 1 == k:
            return ConsecutiveCycles(
                run_start, tuple(found[ell] for ell in range(run_start, length + 1))
            )
    return None


def is_induced_cycle(g: Graph, seq: tuple[int, ...]) -> bool:
    """True when the cycle has no chord in g."""
    validate_cycle(g, seq)
    sub, _ = induced_subgraph(g, seq)
    return sub.m == len(seq)


def is_non_separating(g: Graph, seq: tuple[int, ...]) -> bool:
    """True when g minus the cycle's vertices is connected (and nonempty)."""
    validate_cycle(g, seq)
    mask = 0
    for v in seq:
        mask |= 1 << v
    rest = ((1 << g.n) - 1) & ~mask
    if rest == 0:
        raise GraphError("spanning cycle: the remainder is empty, verdict undefined")
    return _is_connected_mask(g.adj, rest)


def _induced_cycles_of_length(g: Graph, length: int) -> Iterator[tuple[int, ...]]:
    n = g.n
    adj = g.adj
    path = [0]

    def extend(used: int, pathmask: int, above: int, depth: int):
        v = path[-1]
        if depth == length - 1:
            anchor = path[0]
            closing = (1 << v) | (1 << anchor)
            for w in bits(adj[v] & adj[anchor] & above & ~used):
                if path[1] < w and adj[w] & pathmask == closing:
                    yield tuple(path) + (w,)
            return
        if (above & ~used).bit_count() < length - depth:
            return
        for w in bits(adj[v] & above & ~used):
            if adj[w] & pathmask != 1 << v:  # a chord would appear
                continue
            path.append(w)
            yield from extend(used | 1 << w, pathmask | 1 << w, above, depth + 1)
            path.pop()

    for a in range(n - length + 1):
        above = ~((1 << (a + 1)) - 1) & ((1 << n) - 1)
        path[:] = [a]
        yield from extend(1 << a, 1 << a, above, 1)


def induced_odd_cycles(g: Graph) -> Iterator[tuple[int, ...]]:
    """All induced odd cycles, shortest first, lexicographic within a length."""
    for length in range(3, g.n + 1, 2):
        yield from _induced_cycles_of_length(g, length)


def iter_nonseparating_induced_odd_cycles(g: Graph) -> Iterator[tuple[int, ...]]:
    full = (1 << g.n) - 1
    for cyc in induced_odd_cycles(g):
        mask = 0
        for v in cyc:
            mask |= 1 << v
        rest = full & ~mask
        if rest and _is_connected_mask(g.adj, rest):
            yield cyc


def _require_3_connected_nonbipartite(g: Graph) -> None:
    if g.n < 4 or not connectivity_at_least(g, 3).holds:
        raise HypothesisError("graph is not 3-connected")
    if is_bipartite(g).bipartite:
        raise HypothesisError("graph is bipartite, so it has no odd cycle")


def find_nonseparating_induced_odd_cycle(g: Graph) -> tuple[int, ...]:
    """A non-separating induced odd cycle of a 3-connected nonbipartite graph.

    All three properties are re-verified on the winner before it is
    returned.  Exhaustion is a ContradictionError, never a silent miss: a
    3-connected nonbipartite graph always has such a cycle.
    """
    _require_3_connected_nonbipartite(g)
    for cyc in iter_nonseparating_induced_odd_cycles(g):
        validate_cycle(g, cyc)
        if len(cyc) % 2 == 1 and is_induced_cycle(g, cyc) and is_non_separating(g, cyc):
            return cyc
    raise ContradictionError(
        "no non-separating induced odd cycle found in a 3-connected nonbipartite "
        f"graph; this should be impossible (graph6: {emit_graph6(g).strip()})"
    )


def structured_pattern_ok(g: Graph, cyc: tuple[int, ...]) -> bool:
    """Audit the spaced-neighbor condition for a selected odd cycle.

    Every non-cut-vertex v of g minus the cycle may see at most two cycle
    vertices, and exactly two only when they sit two apart along the cycle.
    Triangles pass unconditionally.
    """
    validate_cycle(g, cyc)
    length = len(cyc)
    if length == 3:
        return True
    cycmask = 0
    pos = {}
    for i, v in enumerate(cyc):
        cycmask |= 1 << v
        pos[v] = i
    rest = [v for v in g.vertices() if not cycmask >> v & 1]
    if not rest:
        raise GraphError("spanning cycle has no remainder to audit")
    sub, idmap = induced_subgraph(g, rest)
    cut_new = articulation_points(sub)
    cut_old = {idmap[v] for v in cut_new}
    for v in rest:
        if v in cut_old:
            continue
        inter = g.adj[v] & cycmask
        count = inter.bit_count()
        if count > 2:
            return False
        if count == 2:
            i, j = (pos[u] for u in bits(inter))
            if (i - j) % length not in (2, length - 2):
                return False
    return True


def select_structured_odd_cycle(g: Graph) -> tuple[tuple[int, ...], str]:
    """First non-separating induced odd cycle that is a triangle or passes
    the spaced-neighbor audit, tagged accordingly.

    Requires minimum degree >= 4 plus the existence of some non-separating
    induced odd cycle; given those, a qualifying cycle always exists, so
    exhaustion is a ContradictionError.
    """
    if g.min_degree() < 4:
        raise HypothesisError(f"minimum degree {g.min_degree()} < 4")
    seen_any = False
    for cyc in iter_nonseparating_induced_odd_cycles(g):
        seen_any = True
        if len(cyc) == 3:
            tag = "triangle"
        elif structured_pattern_ok(g, cyc):
            tag = "spaced"
        else:
            continue
        validate_cycle(g, cyc)
        if is_induced_cycle(g, cyc) and is_non_separating(g, cyc):
            return cyc, tag
    if not seen_any:
        raise HypothesisError("graph has no non-separating induced odd cycle")
    raise ContradictionError(
        "no structured odd cycle found although one is guaranteed at minimum "
        f"degree >= 4 (graph6: {emit_graph6(g).strip()})"
    )
