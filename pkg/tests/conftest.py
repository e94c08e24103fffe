"""Shared fixtures: hand-built instances that exercise the constructive
certificate routes, and the exhaustive class universe for acceptance scans.
"""

from __future__ import annotations

import pytest

from cyclespectrum import Graph, petersen


def cycle_blowup_pairs() -> Graph:
    """Each 5-cycle class doubled into an independent pair; 4-regular,
    triangle-free, nonbipartite, 3-connected, order 10."""
    edges = []
    for i in range(5):
        j = (i + 1) % 5
        for a in (i, i + 5):
            for b in (j, j + 5):
                edges.append((a, b))
    return Graph.from_edges(10, edges)


def planted_biconnected_remainder() -> Graph:
    """5-cycle 0..4 plus a Petersen copy on 5..14, each Petersen vertex tied
    to exactly one cycle vertex.  Removing the planted cycle leaves the
    2-connected Petersen with single contacts, which forces the
    constructive route through a 2-connected remainder."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + a, 5 + b) for a, b in petersen().edges()]
    contacts = {0: (0, 2), 1: (1, 4), 2: (3, 6), 3: (5, 9), 4: (7, 8)}
    for i, (a, b) in contacts.items():
        edges += [(i, 5 + a), (i, 5 + b)]
    return Graph.from_edges(15, edges)


def planted_endblock_remainder() -> Graph:
    """5-cycle 0..4 plus two Petersen copies glued at one cut vertex (5),
    every other remainder vertex tied to exactly one cycle vertex.  The
    remainder is connected but not 2-connected, driving the end-block
    construction."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    pet = list(petersen().edges())
    edges += [(5 + a, 5 + b) for a, b in pet]

    def q(j: int) -> int:
        return 5 if j == 0 else 14 + j

    edges += [(q(a), q(b)) for a, b in pet]
    contacts = {
        0: [6, 8, 15, 17],
        1: [7, 9, 16, 18],
        2: [10, 11, 19, 20],
        3: [12, 13, 21],
        4: [14, 22, 23],
    }
    for i, targets in contacts.items():
        edges += [(i, t) for t in targets]
    return Graph.from_edges(24, edges)


def planted_degree_five() -> Graph:
    """5-cycle 0..4 over the circulant C15(1,4); minimum degree 5 and
    triangle-free, for the k=5 constructive route."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    for a in range(15):
        for d in (1, 4):
            edges.append((5 + a, 5 + (a + d) % 15))
    for i in range(5):
        for off in (0, 2, 7):
            edges.append((i, 5 + (3 * i + off) % 15))
    return Graph.from_edges(20, edges)


@pytest.fixture(scope="session")
def universe():
    """All isomorphism classes up to order 9, keyed by order.

    Building order 9 takes a couple of minutes; the acceptance module is
    the only consumer, and shares this single build.
    """
    from cyclespectrum import all_graphs

    return {n: all_graphs(n) for n in range(1, 10)}
