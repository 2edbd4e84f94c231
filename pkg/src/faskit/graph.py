"""Oriented multigraph model and ordering/feedback-arc-set primitives.

An oriented multigraph is a directed multigraph with no loops and no
directed 2-cycles; parallel arcs in the same direction are allowed and
stored as a multiplicity count per ordered vertex pair.  All degree
arithmetic counts multiplicity, so ``out_degree(v)`` can exceed the
number of distinct out-neighbors.

Vertex ids are dense non-negative integers at construction time.  A
removed vertex becomes permanently inactive within that graph value and
its id is never reused, which keeps ids stable across a sequence of
reductions.
"""
from __future__ import annotations

from typing import Iterable, Iterator

from .errors import (
    InactiveVertexError,
    LoopArcError,
    MissingArcError,
    OrderingMismatchError,
    TwoCycleError,
)


class OrientedMultigraph:
    """Loop-free, 2-cycle-free directed multigraph with degree caches."""

    __slots__ = ("_out", "_in", "_outdeg", "_indeg", "_m")

    def __init__(self, n: int = 0):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self._out: dict[int, dict[int, int]] = {v: {} for v in range(n)}
        self._in: dict[int, dict[int, int]] = {v: {} for v in range(n)}
        self._outdeg: dict[int, int] = {v: 0 for v in range(n)}
        self._indeg: dict[int, int] = {v: 0 for v in range(n)}
        self._m = 0

    @classmethod
    def from_vertices(cls, vertices: Iterable[int]) -> "OrientedMultigraph":
        """Graph with the given (not necessarily dense) active vertex ids."""
        g = cls(0)
        for v in vertices:
            if v < 0:
                raise ValueError("vertex ids must be non-negative")
            g._out[v] = {}
            g._in[v] = {}
            g._outdeg[v] = 0
            g._indeg[v] = 0
        return g

    # ---- basic queries ----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._out)

    @property
    def m(self) -> int:
        return self._m

    @property
    def vertices(self) -> Iterable[int]:
        return self._out.keys()

    def has_vertex(self, v: int) -> bool:
        return v in self._out

    def _require_vertex(self, v: int) -> None:
        if v not in self._out:
            raise InactiveVertexError(f"vertex {v} is not active")

    def multiplicity(self, u: int, v: int) -> int:
        self._require_vertex(u)
        self._require_vertex(v)
        return self._out[u].get(v, 0)

    def out_degree(self, v: int) -> int:
        self._require_vertex(v)
        return self._outdeg[v]

    def in_degree(self, v: int) -> int:
        self._require_vertex(v)
        return self._indeg[v]

    def degree(self, v: int) -> int:
        self._require_vertex(v)
        return self._outdeg[v] + self._indeg[v]

    def out_neighbors(self, v: int) -> list[int]:
        """Distinct out-neighbors; len() of this may be below out_degree."""
        self._require_vertex(v)
        return list(self._out[v])

    def in_neighbors(self, v: int) -> list[int]:
        self._require_vertex(v)
        return list(self._in[v])

    def neighbors(self, v: int) -> set[int]:
        self._require_vertex(v)
        return set(self._out[v]) | set(self._in[v])

    def max_degree(self) -> int:
        if not self._out:
            return 0
        return max(self._outdeg[v] + self._indeg[v] for v in self._out)

    def arcs(self) -> Iterator[tuple[int, int, int]]:
        """All arcs as (tail, head, multiplicity), sorted by (tail, head)."""
        for u in sorted(self._out):
            nbrs = self._out[u]
            for v in sorted(nbrs):
                yield (u, v, nbrs[v])

    # ---- mutation -----------------------------------------------------------

    def add_arc(self, u: int, v: int, mult: int = 1) -> None:
        if mult < 1:
            raise ValueError("multiplicity must be at least 1")
        self._require_vertex(u)
        self._require_vertex(v)
        if u == v:
            raise LoopArcError(f"loop arc ({u}, {u}) rejected")
        if self._out[v].get(u, 0) > 0:
            raise TwoCycleError(f"arc ({u}, {v}) would close a 2-cycle with ({v}, {u})")
        self._out[u][v] = self._out[u].get(v, 0) + mult
        self._in[v][u] = self._in[v].get(u, 0) + mult
        self._outdeg[u] += mult
        self._indeg[v] += mult
        self._m += mult

    def remove_arc(self, u: int, v: int, mult: int = 1) -> None:
        if mult < 1:
            raise ValueError("multiplicity must be at least 1")
        self._require_vertex(u)
        self._require_vertex(v)
        have = self._out[u].get(v, 0)
        if have < mult:
            raise MissingArcError(
                f"cannot remove {mult} copies of ({u}, {v}); only {have} present"
            )
        if have == mult:
            del self._out[u][v]
            del self._in[v][u]
        else:
            self._out[u][v] = have - mult
            self._in[v][u] = have - mult
        self._outdeg[u] -= mult
        self._indeg[v] -= mult
        self._m -= mult

    def remove_vertex(self, x: int) -> None:
        """Delete x and every arc incident to it."""
        self._require_vertex(x)
        for v, c in list(self._out[x].items()):
            del self._in[v][x]
            self._indeg[v] -= c
            self._m -= c
        for u, c in list(self._in[x].items()):
            del self._out[u][x]
            self._outdeg[u] -= c
            self._m -= c
        del self._out[x]
        del self._in[x]
        del self._outdeg[x]
        del self._indeg[x]

    # ---- whole-graph operations --------------------------------------------

    def copy(self) -> "OrientedMultigraph":
        g = OrientedMultigraph(0)
        g._out = {u: dict(nbrs) for u, nbrs in self._out.items()}
        g._in = {u: dict(nbrs) for u, nbrs in self._in.items()}
        g._outdeg = dict(self._outdeg)
        g._indeg = dict(self._indeg)
        g._m = self._m
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrientedMultigraph):
            return NotImplemented
        return self._out.keys() == other._out.keys() and self._out == other._out

    def __repr__(self) -> str:
        return f"OrientedMultigraph(n={self.n}, m={self.m})"

    def is_acyclic(self) -> bool:
        indeg = {v: len(self._in[v]) for v in self._out}
        queue = [v for v, d in indeg.items() if d == 0]
        seen = 0
        while queue:
            u = queue.pop()
            seen += 1
            for v in self._out[u]:
                indeg[v] -= 1
                if indeg[v] == 0:
                    queue.append(v)
        return seen == self.n


def induced_subgraph(g: OrientedMultigraph, vertices: Iterable[int]) -> OrientedMultigraph:
    """Subgraph on the given vertex subset, keeping original ids."""
    keep = set(vertices)
    sub = OrientedMultigraph.from_vertices(sorted(keep))
    for u, v, c in g.arcs():
        if u in keep and v in keep:
            sub.add_arc(u, v, c)
    return sub


class Ordering:
    """A permutation of the active vertices of some graph.

    The backward arcs of an ordering (arcs from a later position to an
    earlier one) always form a feedback arc set.
    """

    __slots__ = ("_seq", "_pos")

    def __init__(self, sequence: Iterable[int]):
        seq = tuple(sequence)
        pos: dict[int, int] = {}
        for i, v in enumerate(seq):
            if v in pos:
                raise OrderingMismatchError(f"vertex {v} appears twice in ordering")
            pos[v] = i
        self._seq = seq
        self._pos = pos

    @property
    def sequence(self) -> tuple[int, ...]:
        return self._seq

    def position(self, v: int) -> int:
        try:
            return self._pos[v]
        except KeyError:
            raise OrderingMismatchError(f"vertex {v} not in ordering") from None

    def __contains__(self, v: int) -> bool:
        return v in self._pos

    def __iter__(self) -> Iterator[int]:
        return iter(self._seq)

    def __len__(self) -> int:
        return len(self._seq)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ordering):
            return NotImplemented
        return self._seq == other._seq

    def __repr__(self) -> str:
        return f"Ordering({list(self._seq)})"


class FeedbackArcSet:
    """Arc multiset whose removal leaves the reference graph acyclic."""

    __slots__ = ("_counts",)

    def __init__(self, counts: dict[tuple[int, int], int] | None = None):
        self._counts = {arc: c for arc, c in (counts or {}).items() if c > 0}

    @property
    def size(self) -> int:
        return sum(self._counts.values())

    def count(self, u: int, v: int) -> int:
        return self._counts.get((u, v), 0)

    def items(self) -> list[tuple[int, int, int]]:
        """Sorted (tail, head, count) triples."""
        return [(u, v, c) for (u, v), c in sorted(self._counts.items())]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FeedbackArcSet):
            return NotImplemented
        return self._counts == other._counts

    def __repr__(self) -> str:
        return f"FeedbackArcSet(size={self.size})"


def backward_arcs(g: OrientedMultigraph, ordering: Ordering) -> FeedbackArcSet:
    """All arcs running from a later position to an earlier one."""
    if set(ordering.sequence) != set(g.vertices):
        raise OrderingMismatchError("ordering does not cover the active vertex set")
    counts: dict[tuple[int, int], int] = {}
    for u, v, c in g.arcs():
        if ordering.position(u) > ordering.position(v):
            counts[(u, v)] = c
    return FeedbackArcSet(counts)


def without_arcs(g: OrientedMultigraph, fas: FeedbackArcSet) -> OrientedMultigraph:
    """Copy of g with the multiset fas removed; raises MissingArcError if absent."""
    h = g.copy()
    for u, v, c in fas.items():
        if not h.has_vertex(u) or not h.has_vertex(v) or h.multiplicity(u, v) < c:
            raise MissingArcError(f"arc ({u}, {v}) x{c} not present in graph")
        h.remove_arc(u, v, c)
    return h


def verify_fas(g: OrientedMultigraph, fas: FeedbackArcSet) -> bool:
    """True iff removing the multiset from g leaves an acyclic graph."""
    return without_arcs(g, fas).is_acyclic()


def three_cycles_through(g: OrientedMultigraph, x: int) -> list[tuple[int, int, int]]:
    """Directed 3-cycles containing x, one per vertex set, as (x, y, z).

    The reported orientation is x -> y -> z -> x.  Because 2-cycles are
    excluded, a vertex triple carries at most one directed triangle, so
    the enumeration below is already duplicate-free.
    """
    res = []
    for y in sorted(g.out_neighbors(x)):
        for z in sorted(g.out_neighbors(y)):
            if z != x and g.multiplicity(z, x) > 0:
                res.append((x, y, z))
    return res


def transitive_triangles(g: OrientedMultigraph) -> Iterator[tuple[int, int, int]]:
    """Vertex triples (x, y, z) with arcs x->y, x->z and y->z all present."""
    for x in sorted(g.vertices):
        outs = sorted(g.out_neighbors(x))
        for y in outs:
            for z in outs:
                if y != z and g.multiplicity(y, z) > 0:
                    yield (x, y, z)
