"""Engine that assembles k cycles of consecutive lengths (k = 4 or 5) in
3-connected nonbipartite graphs of minimum degree >= k and order >= k+2,
plus a verifier for the bare statement.

The constructive pipeline glues two cycle arcs through a selected
non-separating induced odd cycle to a nice pair or good triple of paths in
the remainder.  Where the construction rests on results this package does
not re-derive (graphs with a triangle; a remainder vertex touching the
selected cycle twice) the engine falls back to exact spectrum search and
says so in the certificate's route, so every certificate discloses its own
provenance.  Certificates re-validate all their cycles before being
returned, independent of route.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .errors import ContradictionError, GraphError, HypothesisError
from .graphs import Graph, bits, emit_graph6, induced_subgraph
from .structure import (
    RootedGraph,
    block_cutvertex_tree,
    connectivity_at_least,
    find_triangle,
    is_bipartite,
    is_biconnected,
)
from .cycles import (
    has_k_consecutive,
    select_structured_odd_cycle,
    validate_cycle,
)
from .paths import three_good_paths, two_nice_paths, validate_path

ROUTE_TRIANGLE = "triangle-fallback"
ROUTE_DOUBLE_CONTACT = "double-contact-fallback"
ROUTE_BICONNECTED = "constructive-biconnected"
ROUTE_ENDBLOCK = "constructive-endblock"
ROUTE_SPECTRUM = "spectrum-fallback"

CONSTRUCTIVE_ROUTES = (ROUTE_BICONNECTED, ROUTE_ENDBLOCK)
ATTRIBUTED_ROUTES = CONSTRUCTIVE_ROUTES + (ROUTE_TRIANGLE, ROUTE_DOUBLE_CONTACT)


@dataclass(frozen=True)
class ConsecutiveCyclesCertificate:
    """k validated cycles of consecutive lengths plus how they were found."""

    k: int
    cycles: tuple[tuple[int, ...], ...]
    route: str
    provenance: dict = field(default_factory=dict)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cycles)

    @property
    def start(self) -> int:
        return len(self.cycles[0])

    def to_json_dict(self) -> dict:
        return {
            "schema": "1",
            "k": self.k,
            "route": self.route,
            "lengths": list(self.lengths),
            "cycles": [list(c) for c in self.cycles],
            "provenance": _jsonable(self.provenance),
        }


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


@dataclass(frozen=True)
class KCyclesReport:
    """Hypothesis-by-hypothesis verdict for the k-consecutive-cycles claim."""

    k: int
    in_range: bool  # the claim is proved only for k >= 4
    hypotheses: dict
    holds: bool | None  # conclusion checked whenever possible
    witnesses: tuple[tuple[int, ...], ...] | None
    note: str

    @property
    def applicable(self) -> bool:
        return self.in_range and all(self.hypotheses.values())

    @property
    def alarm(self) -> bool:
        """True only when every hypothesis holds and the conclusion fails."""
        return self.applicable and self.holds is False

    def to_json_dict(self) -> dict:
        return {
            "schema": "1",
            "k": self.k,
            "in_range": self.in_range,
            "hypotheses": dict(self.hypotheses),
            "applicable": self.applicable,
            "holds": self.holds,
            "alarm": self.alarm,
            "witnesses": [list(c) for c in self.witnesses] if self.witnesses else None,
            "note": self.note,
        }


def _statement_hypotheses(g: Graph, k: int) -> dict:
    three = g.n >= 4 and connectivity_at_least(g, 3).holds
    return {
        "three_connected": three,
        "nonbipartite": not is_bipartite(g).bipartite,
        "min_degree": g.min_degree() >= k,
        "order": g.n >= k + 2,
    }


def verify_kcycles(g: Graph, k: int) -> KCyclesReport:
    """Check the hypotheses and, when they hold, the conclusion.

    A graph meeting every hypothesis but missing k consecutive cycle
    lengths is reported as an alarm: that would be a counterexample to the
    published statement, which is the whole point of scanning for it.
    """
    if k < 1:
        raise GraphError(f"k must be positive, got {k}")
    hyps = _statement_hypotheses(g, k)
    in_range = k >= 4
    run = has_k_consecutive(g, k)
    holds = run is not None
    witnesses = run.cycles if run else None
    if not in_range:
        note = (
            f"k={k} is outside the proved range (k >= 4); informational check: "
            f"{k} consecutive cycle lengths "
            + ("exist" if holds else "do not exist")
        )
    elif not all(hyps.values()):
        failed = ", ".join(name for name, ok in hyps.items() if not ok)
        note = f"hypotheses not met: {failed}"
    elif holds:
        note = f"holds with lengths starting at {run.start}"
    else:
        note = "COUNTEREXAMPLE ALARM: hypotheses hold but the conclusion fails"
    return KCyclesReport(k, in_range, hyps, holds, witnesses, note)


def find_bridging_index(
    g: Graph,
    cyc: tuple[int, ...],
    d1: Iterable[int],
    x: int,
    g2: Iterable[int],
) -> int:
    """Least i such that cycle vertex i has a neighbor in d1 minus the cut
    vertex and the vertex half way around (i + s, indices mod 2s+1) has a
    neighbor in g2.

    d1 and g2 must cover everything off the cycle and intersect exactly in
    the cut vertex x.  Exhaustion contradicts the structure guaranteed by
    the setup, so it raises instead of returning a sentinel.
    """
    validate_cycle(g, cyc)
    length = len(cyc)
    if length % 2 == 0:
        raise GraphError("bridging index is defined for odd cycles")
    d1set = frozenset(d1)
    g2set = frozenset(g2)
    cycset = frozenset(cyc)
    if x not in d1set or x not in g2set:
        raise GraphError("the cut vertex must belong to both sides")
    if d1set & g2set != {x}:
        raise GraphError("sides must intersect exactly in the cut vertex")
    if d1set | g2set != set(g.vertices()) - cycset:
        raise GraphError("sides must partition the vertices off the cycle")
    if not d1set - {x}:
        raise GraphError("first side has no vertex besides the cut vertex")
    s = (length - 1) // 2
    d1mask = 0
    for v in d1set - {x}:
        d1mask |= 1 << v
    g2mask = 0
    for v in g2set:
        g2mask |= 1 << v
    for i in range(length):
        if g.adj[cyc[i]] & d1mask and g.adj[cyc[(i + s) % length]] & g2mask:
            return i
    raise ContradictionError(
        "no bridging index exists although the setup guarantees one "
        f"(graph6: {emit_graph6(g).strip()})"
    )


def _check_engine_hypotheses(g: Graph, k: int) -> None:
    hyps = _statement_hypotheses(g, k)
    failed = [name for name, ok in hyps.items() if not ok]
    if failed:
        raise HypothesisError(f"hypotheses not met for k={k}: {', '.join(failed)}")


def _spectrum_certificate(g: Graph, k: int, route: str, provenance: dict) -> ConsecutiveCyclesCertificate:
    run = has_k_consecutive(g, k)
    if run is None:
        raise ContradictionError(
            f"{k} consecutive cycle lengths must exist under the checked hypotheses "
            f"but spectrum search found none (graph6: {emit_graph6(g).strip()})"
        )
    return _finish(g, k, run.cycles, route, provenance)


def _finish(
    g: Graph, k: int, cycles: Iterable[tuple[int, ...]], route: str, provenance: dict
) -> ConsecutiveCyclesCertificate:
    cycles = tuple(cycles)
    for c in cycles:
        validate_cycle(g, c)
    lengths = [len(c) for c in cycles]
    if len(cycles) != k or lengths != list(range(lengths[0], lengths[0] + k)):
        raise ContradictionError(f"certificate lengths {lengths} are not {k} consecutive")
    return ConsecutiveCyclesCertificate(k, cycles, route, provenance)


def _extract_window(pool: list[tuple[int, ...]], k: int) -> tuple[tuple[int, ...], ...] | None:
    by_len: dict[int, tuple[int, ...]] = {}
    for c in pool:
        by_len.setdefault(len(c), c)
    for start in sorted(by_len):
        if all(start + j in by_len for j in range(k)):
            return tuple(by_len[start + j] for j in range(k))
    return None


def construct_consecutive_cycles(g: Graph, k: int) -> ConsecutiveCyclesCertificate:
    """Produce a certificate of k cycles of consecutive lengths, k in {4, 5}.

    Larger k is rejected rather than silently spectrum-checked: this engine
    only certifies the range its construction actually covers.
    """
    if k not in (4, 5):
        raise GraphError(
            f"constructive engine covers k in {{4, 5}}, got {k}; "
            "use the plain verifier for other k"
        )
    _check_engine_hypotheses(g, k)

    tri = find_triangle(g)
    if tri is not None:
        return _spectrum_certificate(g, k, ROUTE_TRIANGLE, {"triangle": list(tri)})

    cyc, tag = select_structured_odd_cycle(g)
    prov: dict = {"odd_cycle": list(cyc), "tag": tag}
    if tag != "spaced":  # cannot happen in a triangle-free graph
        prov["diagnostic"] = f"unexpected tag {tag} on a triangle-free graph"
        return _spectrum_certificate(g, k, ROUTE_SPECTRUM, prov)

    length = len(cyc)
    s = (length - 1) // 2
    cycmask = 0
    for v in cyc:
        cycmask |= 1 << v
    g1_vertices = [v for v in g.vertices() if not cycmask >> v & 1]
    if len(g1_vertices) < 3:
        prov["diagnostic"] = f"remainder order {len(g1_vertices)} < 3"
        return _spectrum_certificate(g, k, ROUTE_SPECTRUM, prov)
    sub, idmap = induced_subgraph(g, g1_vertices)
    back = {old: new for new, old in enumerate(idmap)}

    try:
        if is_biconnected(sub):
            return _case_biconnected(g, k, cyc, s, cycmask, sub, idmap, back, prov)
        return _case_endblock(g, k, cyc, s, cycmask, sub, idmap, back, prov)
    except (HypothesisError, ContradictionError, GraphError) as exc:
        prov["diagnostic"] = f"assembly failed: {exc}"
        return _spectrum_certificate(g, k, ROUTE_SPECTRUM, prov)


def _contacts(g: Graph, v: int, cycmask: int) -> int:
    return (g.adj[v] & cycmask).bit_count()


def _case_biconnected(g, k, cyc, s, cycmask, sub, idmap, back, prov):
    for v in idmap:
        contacts = _contacts(g, v, cycmask)
        if contacts == 2:
            prov["double_contact_vertex"] = v
            return _spectrum_certificate(g, k, ROUTE_DOUBLE_CONTACT, prov)
        if contacts > 2:
            raise GraphError(f"vertex {v} touches the cycle more than twice")

    g1mask = 0
    for v in idmap:
        g1mask |= 1 << v
    v0, vs = cyc[0], cyc[s]
    pick = None
    for v in bits(g.adj[v0] & g1mask):
        for u in bits(g.adj[vs] & g1mask):
            if u != v:
                pick = (v, u)
                break
        if pick:
            break
    if pick is None:
        raise GraphError("no distinct attachment pair at the cycle's poles")
    v, u = pick
    q1 = (v,) + tuple(cyc[:s + 1]) + (u,)
    q2 = (v, cyc[0]) + tuple(cyc[:s - 1:-1]) + (u,)
    validate_path(g, q1, v, u)
    validate_path(g, q2, v, u)

    rooted = RootedGraph(sub, back[u], back[v])
    family = two_nice_paths(rooted) if k == 4 else three_good_paths(rooted)
    mapped = [tuple(idmap[p] for p in path) for path in family.paths]
    prov.update(
        {
            "q1": list(q1),
            "q2": list(q2),
            "family_kind": family.kind,
            "family_lengths": list(family.lengths),
            "family": [list(p) for p in mapped],
        }
    )
    pool = []
    for q in (q1, q2):
        for p in mapped:  # p runs u -> v, q runs v -> u
            pool.append(tuple(q) + tuple(p[1:-1]))
    return _assemble(g, k, pool, ROUTE_BICONNECTED, prov)


def _case_endblock(g, k, cyc, s, cycmask, sub, idmap, back, prov):
    tree = block_cutvertex_tree(sub)
    if not tree.end_blocks:
        raise GraphError("remainder is neither 2-connected nor separable")
    for bi, cut in tree.end_blocks:
        for w in tree.blocks[bi]:
            if w == cut:
                continue
            old = idmap[w]
            if _contacts(g, old, cycmask) == 2:
                prov["double_contact_vertex"] = old
                return _spectrum_certificate(g, k, ROUTE_DOUBLE_CONTACT, prov)

    bi, cut_new = tree.end_blocks[0]
    d1_new = tree.blocks[bi]
    if len(d1_new) < 3:
        raise GraphError("end-block is a bridge edge, outside the construction")
    x_old = idmap[cut_new]
    d1_old = {idmap[w] for w in d1_new}
    g2_old = {idmap[w] for w in range(sub.n) if w not in d1_new} | {x_old}

    i0 = find_bridging_index(g, cyc, d1_old, x_old, g2_old)
    length = len(cyc)
    d1mask = 0
    for w in d1_old - {x_old}:
        d1mask |= 1 << w
    g2mask = 0
    for w in g2_old:
        g2mask |= 1 << w
    v = min(bits(g.adj[cyc[i0]] & d1mask))
    u = min(bits(g.adj[cyc[(i0 + s) % length]] & g2mask))

    arc1 = tuple(cyc[(i0 + t) % length] for t in range(s + 1))
    arc2 = tuple(cyc[(i0 - t) % length] for t in range(s + 2))
    q1 = (v,) + arc1 + (u,)
    q2 = (v,) + arc2 + (u,)
    validate_path(g, q1, v, u)
    validate_path(g, q2, v, u)

    t_path = _shortest_path_within(g, u, x_old, g2_old)
    if t_path is None:
        raise GraphError("no connector from the attachment to the cut vertex")

    d1_sorted = sorted(d1_old)
    d1_sub, d1_map = induced_subgraph(g, d1_sorted)
    d1_back = {old: new for new, old in enumerate(d1_map)}
    rooted = RootedGraph(d1_sub, d1_back[x_old], d1_back[v])
    family = two_nice_paths(rooted) if k == 4 else three_good_paths(rooted)
    mapped = [tuple(d1_map[p] for p in path) for path in family.paths]
    prov.update(
        {
            "bridging_index": i0,
            "q1": list(q1),
            "q2": list(q2),
            "t_path": list(t_path),
            "family_kind": family.kind,
            "family_lengths": list(family.lengths),
            "family": [list(p) for p in mapped],
        }
    )
    pool = []
    for q in (q1, q2):
        for p in mapped:  # q: v->u, t: u->x, p: x->v
            pool.append(tuple(q) + tuple(t_path[1:]) + tuple(p[1:-1]))
    return _assemble(g, k, pool, ROUTE_ENDBLOCK, prov)


def _assemble(g, k, pool, route, prov):
    window = _extract_window(pool, k)
    if window is None:
        raise GraphError(
            f"assembled pool of {len(pool)} cycles holds no {k}-window "
            f"(lengths {sorted(len(c) for c in pool)})"
        )
    prov["pool_lengths"] = sorted(len(c) for c in pool)
    return _finish(g, k, window, route, prov)


def _shortest_path_within(g: Graph, src: int, dst: int, allowed: Iterable[int]) -> tuple[int, ...] | None:
    """BFS path from src to dst using only allowed vertices; (src,) if equal."""
    allowed_mask = 0
    for v in allowed:
        allowed_mask |= 1 << v
    if not (allowed_mask >> src & 1 and allowed_mask >> dst & 1):
        raise GraphError("endpoints must lie in the allowed set")
    if src == dst:
        return (src,)
    parent = {src: None}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        for u in bits(g.adj[v] & allowed_mask):
            if u in parent:
                continue
            parent[u] = v
            if u == dst:
                seq = [u]
                while parent[seq[-1]] is not None:
                    seq.append(parent[seq[-1]])
                return tuple(reversed(seq))
            queue.append(u)
    return None
