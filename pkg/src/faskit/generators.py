"""Instance constructors: named extremal graphs and random families.

The named constructions (d7, d8, d14, d24) are small extremal digraphs
used as lower-bound witnesses; each comes with an explicit arc list and,
for d7/d8, a certifying family of short cycles.  Random generators are
deterministic per seed (Python's Mersenne Twister, stable across
platforms).
"""
from __future__ import annotations

import random

from .errors import DegreeExceedsKError, InfeasibleError
from .graph import OrientedMultigraph


def _cyclic(i: int, n: int = 7) -> int:
    """Map a 1-based index, taken modulo n, to a 0-based vertex id."""
    return (i - 1) % n


def gen_d7() -> OrientedMultigraph:
    """7-vertex oriented graph with max degree 5 and fas = 5.

    Arcs: the cycle i -> i+1, the chords i+2 -> i (indices mod 7), plus
    the two extra arcs 1 -> 5 and 2 -> 6 (1-based labels).  n=7, m=16.
    """
    g = OrientedMultigraph(7)
    for i in range(1, 8):
        g.add_arc(_cyclic(i), _cyclic(i + 1))
    for i in range(1, 8):
        g.add_arc(_cyclic(i + 2), _cyclic(i))
    g.add_arc(_cyclic(1), _cyclic(5))
    g.add_arc(_cyclic(2), _cyclic(6))
    return g


def d7_cycle_family() -> list[tuple[int, ...]]:
    """Nine directed triangles of d7; every arc lies on at most two."""
    fam = [(_cyclic(i), _cyclic(i + 1), _cyclic(i + 2)) for i in range(1, 8)]
    fam.append((_cyclic(1), _cyclic(5), _cyclic(3)))
    fam.append((_cyclic(2), _cyclic(6), _cyclic(4)))
    return fam


def gen_d8() -> OrientedMultigraph:
    """d7 plus an eighth vertex wired so every arc lies on exactly two
    family cycles.  n=8, m=20, max degree 6."""
    g = OrientedMultigraph(8)
    for u, v, c in gen_d7().arcs():
        g.add_arc(u, v, c)
    for u, v in ((5, 8), (8, 1), (6, 8), (8, 2)):
        g.add_arc(u - 1, v - 1)
    return g


def d8_cycle_family() -> list[tuple[int, ...]]:
    """Thirteen cycles of d8 (twelve triangles and one 4-cycle)."""
    fam = d7_cycle_family()
    fam.append((4, 7, 0))      # 5 -> 8 -> 1 -> 5
    fam.append((5, 7, 1))      # 6 -> 8 -> 2 -> 6
    fam.append((6, 4, 7, 1))   # 7 -> 5 -> 8 -> 2 -> 7
    fam.append((0, 5, 7))      # 1 -> 6 -> 8 -> 1
    return fam


def gen_d24() -> OrientedMultigraph:
    """Three copies of d8 tied together by four cross 3-cycles.

    The cross cycles run through the copies of vertices 3, 4, 7 and 8
    (1-based labels), which raises every vertex to degree 6.  n=24, m=72.
    """
    g = OrientedMultigraph(24)
    base = gen_d8()
    for copy in range(3):
        off = 8 * copy
        for u, v, c in base.arcs():
            g.add_arc(u + off, v + off, c)
    for label in (3, 4, 7, 8):
        v = label - 1
        g.add_arc(v, v + 8)
        g.add_arc(v + 8, v + 16)
        g.add_arc(v + 16, v)
    return g


def gen_d14() -> OrientedMultigraph:
    """Two copies of d7 joined into a strong degree-5 oriented graph.

    The cross arcs 3A -> 3B, 4B -> 4A and 7A -> 7B (1-based labels)
    raise the three degree-4 vertices of each copy to degree 5 and give
    arcs in both directions between the copies, so the union stays
    strongly connected.  n=14, m=35.
    """
    g = OrientedMultigraph(14)
    base = gen_d7()
    for copy in range(2):
        off = 7 * copy
        for u, v, c in base.arcs():
            g.add_arc(u + off, v + off, c)
    g.add_arc(2, 9)    # 3A -> 3B
    g.add_arc(10, 3)   # 4B -> 4A
    g.add_arc(6, 13)   # 7A -> 7B
    return g


def regularize(g: OrientedMultigraph, k: int) -> OrientedMultigraph:
    """Lift a max-degree-k graph to a degree-k multigraph.

    Takes two disjoint copies and, for each vertex u with deficiency
    k - d(u), adds that many parallel arcs from the first copy of u to
    the second.  A single direction keeps the result 2-cycle-free, and
    any feedback arc set must solve both copies, so the minimum at least
    doubles.
    """
    if g.max_degree() > k:
        raise DegreeExceedsKError(f"max degree {g.max_degree()} exceeds target {k}")
    verts = sorted(g.vertices)
    index = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    out = OrientedMultigraph(2 * n)
    for u, v, c in g.arcs():
        out.add_arc(index[u], index[v], c)
        out.add_arc(index[u] + n, index[v] + n, c)
    for v in verts:
        deficiency = k - g.degree(v)
        if deficiency > 0:
            out.add_arc(index[v], index[v] + n, deficiency)
    return out


def gen_triangles(t: int) -> OrientedMultigraph:
    """t vertex-disjoint directed 3-cycles (fas is exactly t)."""
    g = OrientedMultigraph(3 * t)
    for i in range(t):
        a, b, c = 3 * i, 3 * i + 1, 3 * i + 2
        g.add_arc(a, b)
        g.add_arc(b, c)
        g.add_arc(c, a)
    return g


def gen_random(
    n: int, max_deg: int, seed: int, target_arcs: int | None = None
) -> OrientedMultigraph:
    """Random oriented multigraph with every degree at most max_deg.

    Draws ordered pairs uniformly and keeps an arc whenever both
    endpoint degrees stay under the cap and no 2-cycle arises; repeated
    draws of the same pair yield parallel arcs.  Deterministic per seed.
    """
    rng = random.Random(seed)
    g = OrientedMultigraph(n)
    if n < 2:
        return g
    target = (n * max_deg) // 2 if target_arcs is None else target_arcs
    attempts = 0
    max_attempts = 40 * max(target, 1)
    while g.m < target and attempts < max_attempts:
        attempts += 1
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        if g.degree(u) >= max_deg or g.degree(v) >= max_deg:
            continue
        if g.multiplicity(v, u) > 0:
            continue
        g.add_arc(u, v)
    return g


def gen_random_regular5(n: int, seed: int, max_attempts: int = 200) -> OrientedMultigraph:
    """Random degree-5 oriented multigraph via stub pairing with repair.

    Each vertex contributes five half-arcs; a shuffled pairing orients
    consecutive stubs into arcs.  Pairings that produce loops or
    opposite-direction pairs (2-cycles) are repaired by re-pairing with
    random partners; if a shuffle cannot be repaired the whole pairing
    is redrawn.  Parallel same-direction arcs are allowed.
    """
    if n < 2 or (5 * n) % 2 != 0:
        raise InfeasibleError(f"no degree-5 multigraph on {n} vertices")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(5)]
    half = len(stubs) // 2

    def bad_indices(pairs: list[tuple[int, int]]) -> list[int]:
        direction: dict[tuple[int, int], int] = {}
        for u, v in pairs:
            if u != v:
                direction[(u, v)] = direction.get((u, v), 0) + 1
        bad = []
        for i, (u, v) in enumerate(pairs):
            if u == v or direction.get((v, u), 0) > 0:
                bad.append(i)
        return bad

    for _ in range(max_attempts):
        rng.shuffle(stubs)
        pairs = [(stubs[2 * i], stubs[2 * i + 1]) for i in range(half)]
        for _repair in range(60):
            bad = bad_indices(pairs)
            if not bad:
                g = OrientedMultigraph(n)
                for u, v in pairs:
                    g.add_arc(u, v)
                return g
            for i in bad:
                j = rng.randrange(half)
                ui, vi = pairs[i]
                uj, vj = pairs[j]
                pairs[i] = (ui, vj)
                pairs[j] = (uj, vi)
    raise InfeasibleError(f"could not realize a degree-5 multigraph on {n} vertices")
