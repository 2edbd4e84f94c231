"""Budgeted local reductions with replayable records and ordering lifts.

Each rule deletes a small local pattern and certifies two numbers: the
arcs it removes (net of any added arc) and a budget k by which the
minimum feedback arc set may shrink.  G-prefixed rules certify a net
removal of at least 3k+1 arcs, N-prefixed rules at least 3k.  Applying
a rule never raises a degree above 5 and never creates a 2-cycle, and
its ordering lift reinserts the deleted vertices into *any* ordering of
the reduced graph while adding at most k backward arcs.

Records are value objects: ``apply`` replays one against a graph after
checking the rule's preconditions, and ``lift`` inverts it on the
ordering side.  A trace is the full record sequence of a solver run
plus its terminal state (empty graph, or an exactly-solved remainder
tagged BASE4).
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .errors import (
    InternalInvariantError,
    OrderingMismatchError,
    PreconditionViolatedError,
)
from .graph import Ordering, OrientedMultigraph, three_cycles_through


class ReductionKind(Enum):
    N0 = "N0"
    G1 = "G1"
    G2A = "G2A"
    G2B = "G2B"
    N2 = "N2"
    G3A = "G3A"
    G3B = "G3B"
    N3 = "N3"
    G4 = "G4"
    G5 = "G5"
    N55 = "N55"
    NTT = "NTT"
    N545 = "N545"
    DELX5 = "DELX5"
    BASE4 = "BASE4"

    @property
    def surplus(self) -> bool:
        """True for G-rules, whose net arc removal is at least 3k+1."""
        return self.value.startswith("G")


#: Kinds whose result is a plain subgraph (vertices and arcs only removed).
SUBGRAPH_KINDS = frozenset(
    {
        ReductionKind.N0,
        ReductionKind.N2,
        ReductionKind.N3,
        ReductionKind.N55,
        ReductionKind.NTT,
        ReductionKind.N545,
    }
)

#: Fixed detection priority; vertex-local rules come first.
PRIORITY = (
    ReductionKind.N0,
    ReductionKind.G1,
    ReductionKind.G2A,
    ReductionKind.G2B,
    ReductionKind.N2,
    ReductionKind.G3A,
    ReductionKind.G3B,
    ReductionKind.N3,
    ReductionKind.G4,
    ReductionKind.G5,
    ReductionKind.N55,
    ReductionKind.NTT,
    ReductionKind.N545,
)


@dataclass(frozen=True)
class ReductionRecord:
    """One applied reduction: focus vertices, arc delta and fas budget."""

    kind: ReductionKind
    focus: tuple[int, ...]
    removed: tuple[tuple[int, int, int], ...]
    added: tuple[tuple[int, int, int], ...] = ()
    k: int = 0

    def __post_init__(self):
        if self.kind is ReductionKind.BASE4:
            return
        if self.kind is ReductionKind.DELX5:
            # pays for itself only as part of a composite block
            if self.removed_total != 5 or self.k != 2:
                raise InternalInvariantError("DELX5 must remove exactly 5 arcs at k=2")
            return
        net = self.removed_total - self.added_total
        need = 3 * self.k + 1 if self.kind.surplus else 3 * self.k
        if net < need:
            raise InternalInvariantError(
                f"{self.kind.value}: removes {net} arcs, budget k={self.k} needs {need}"
            )

    @property
    def removed_total(self) -> int:
        return sum(c for _, _, c in self.removed)

    @property
    def added_total(self) -> int:
        return sum(c for _, _, c in self.added)

    def removed_out(self, v: int) -> int:
        """Multiplicity of removed arcs with tail v (the pre-graph out-degree
        for rules that delete v with all its arcs)."""
        return sum(c for u, _, c in self.removed if u == v)

    def removed_in(self, v: int) -> int:
        return sum(c for _, w, c in self.removed if w == v)

    def removed_mult(self, u: int, v: int) -> int:
        return sum(c for a, b, c in self.removed if (a, b) == (u, v))


@dataclass(frozen=True)
class ReductionTrace:
    """Record sequence of one solver run plus its terminal state.

    ``base`` is None when the reductions emptied the graph; otherwise it
    is a BASE4 record whose focus lists the remainder's vertices in the
    exactly-solved order, with k equal to that remainder's optimum.
    """

    records: tuple[ReductionRecord, ...]
    base: ReductionRecord | None = None

    def total_budget(self) -> int:
        return sum(r.k for r in self.records) + (self.base.k if self.base else 0)


# ---------------------------------------------------------------------------
# record builders (each validates its rule's preconditions)
# ---------------------------------------------------------------------------

def _req(cond: bool, msg: str) -> None:
    if not cond:
        raise PreconditionViolatedError(msg)


def _incident(g: OrientedMultigraph, xs: Iterable[int]) -> tuple[tuple[int, int, int], ...]:
    """Arcs with at least one endpoint in xs, each once with multiplicity."""
    xset = set(xs)
    out = []
    seen = set()
    for x in sorted(xset):
        for v in sorted(g.out_neighbors(x)):
            if (x, v) not in seen:
                seen.add((x, v))
                out.append((x, v, g.multiplicity(x, v)))
        for u in sorted(g.in_neighbors(x)):
            if (u, x) not in seen:
                seen.add((u, x))
                out.append((u, x, g.multiplicity(u, x)))
    return tuple(sorted(out))


def has_parallel(g: OrientedMultigraph, x: int) -> bool:
    return any(g.multiplicity(x, v) >= 2 for v in g.out_neighbors(x)) or any(
        g.multiplicity(u, x) >= 2 for u in g.in_neighbors(x)
    )


def n0_record(g: OrientedMultigraph, x: int) -> ReductionRecord:
    _req(g.has_vertex(x) and g.degree(x) == 0, f"N0: vertex {x} must be isolated")
    return ReductionRecord(ReductionKind.N0, (x,), ())


def g1_record(g: OrientedMultigraph, x: int) -> ReductionRecord:
    _req(g.has_vertex(x) and g.degree(x) == 1, f"G1: vertex {x} must have degree 1")
    return ReductionRecord(ReductionKind.G1, (x,), _incident(g, (x,)))


def g2a_record(g: OrientedMultigraph, x: int) -> ReductionRecord:
    _req(g.has_vertex(x) and g.degree(x) == 2, f"G2A: vertex {x} must have degree 2")
    _req(g.out_degree(x) in (0, 2), f"G2A: vertex {x} needs out-degree 0 or 2")
    return ReductionRecord(ReductionKind.G2A, (x,), _incident(g, (x,)))


def g2b_record(g: OrientedMultigraph, x: int) -> ReductionRecord:
    _req(g.has_vertex(x) and g.degree(x) == 2, f"G2B: vertex {x} must have degree 2")
    _req(g.out_degree(x) == 1, f"G2B: vertex {x} needs out-degree 1")
    _req(not three_cycles_through(g, x), f"G2B: vertex {x} lies on a 3-cycle")
    y = g.out_neighbors(x)[0]
    z = g.in_neighbors(x)[0]
    return ReductionRecord(
        ReductionKind.G2B, (x, z, y), _incident(g, (x,)), added=((z, y, 1),)
    )


def g3a_record(g: OrientedMultigraph, x: int) -> ReductionRecord:
    _req(g.has_vertex(x) and g.degree(x) == 3, f"G3A: vertex {x} must have degree 3")
    _req(g.out_degree(x) in (0, 3), f"G3A: vertex {x} needs out-degree 0 or 3")
    return ReductionRecord(ReductionKind.G3A, (x,), _incident(g, (x,)))


def g3b_record(g: OrientedMultigraph, x: int) -> ReductionRecord:
    _req(g.has_vertex(x) and g.degree(x) == 3, f"G3B: vertex {x} must have degree 3")
    _req(g.out_degree(x) in (1, 2), f"G3B: vertex {x} needs out-degree 1 or 2")
    _req(has_parallel(g, x), f"G3B: vertex {x} needs a parallel pair")
    y = g.out_neighbors(x)[0]
    z = g.in_neighbors(x)[0]
    if g.multiplicity(y, z) > 0:
        removed = tuple(sorted(_incident(g, (x,)) + ((y, z, 1),)))
        return ReductionRecord(ReductionKind.G3B, (x, z, y), removed, k=1)
    return ReductionRecord(
        ReductionKind.G3B, (x, z, y), _incident(g, (x,)), added=((z, y, 1),)
    )


def g4_record(g: OrientedMultigraph, x: int) -> ReductionRecord:
    _req(g.has_vertex(x) and g.degree(x) == 4, f"G4: vertex {x} must have degree 4")
    _req(g.out_degree(x) in (0, 1, 3, 4), f"G4: vertex {x} needs out-degree in 0,1,3,4")
    return ReductionRecord(ReductionKind.G4, (x,), _incident(g, (x,)), k=1)


def g5_record(g: OrientedMultigraph, x: int) -> ReductionRecord:
    _req(g.has_vertex(x) and g.degree(x) == 5, f"G5: vertex {x} must have degree 5")
    _req(g.out_degree(x) in (0, 1, 4, 5), f"G5: vertex {x} needs out-degree in 0,1,4,5")
    return ReductionRecord(ReductionKind.G5, (x,), _incident(g, (x,)), k=1)


def n2_record(
    g: OrientedMultigraph, x: int, cycle: tuple[int, int, int] | None = None
) -> ReductionRecord:
    """Delete one copy of each arc of a 3-cycle through the degree-2 vertex x."""
    _req(g.has_vertex(x) and g.degree(x) == 2, f"N2: vertex {x} must have degree 2")
    cycles = three_cycles_through(g, x)
    _req(bool(cycles), f"N2: vertex {x} lies on no 3-cycle")
    if cycle is None:
        cycle = cycles[0]
    else:
        _req(tuple(cycle) in cycles, f"N2: {cycle!r} is not a 3-cycle through {x}")
    x0, y, z = cycle
    removed = tuple(sorted(((x0, y, 1), (y, z, 1), (z, x0, 1))))
    return ReductionRecord(ReductionKind.N2, (x0, y, z), removed, k=1)


def n3_record(g: OrientedMultigraph, x: int) -> ReductionRecord:
    _req(g.has_vertex(x) and g.degree(x) == 3, f"N3: vertex {x} must have degree 3")
    _req(g.out_degree(x) in (1, 2), f"N3: vertex {x} needs out-degree 1 or 2")
    _req(not has_parallel(g, x), f"N3: vertex {x} is incident with parallel arcs")
    return ReductionRecord(ReductionKind.N3, (x,), _incident(g, (x,)), k=1)


def n55_record(g: OrientedMultigraph, x: int, y: int) -> ReductionRecord:
    """Delete both endpoints of an arc between two degree-5 vertices."""
    _req(g.has_vertex(x) and g.has_vertex(y), "N55: endpoints must be active")
    mult = g.multiplicity(x, y)
    _req(mult > 0, f"N55: arc ({x}, {y}) missing")
    _req(g.degree(x) == 5 and g.degree(y) == 5, "N55: both endpoints need degree 5")
    _req(
        g.out_degree(x) == 2 or g.out_degree(y) == 3,
        f"N55: needs out-degree 2 at {x} or out-degree 3 at {y}",
    )
    k = 3 if mult == 1 else 2
    return ReductionRecord(ReductionKind.N55, (x, y), _incident(g, (x, y)), k=k)


def ntt_record(g: OrientedMultigraph, x: int, y: int, z: int) -> ReductionRecord:
    """Delete a transitive triangle (arcs x->y, x->z, y->z) of high degree."""
    for v in (x, y, z):
        _req(g.has_vertex(v), f"NTT: vertex {v} must be active")
    _req(
        g.multiplicity(x, y) > 0 and g.multiplicity(x, z) > 0 and g.multiplicity(y, z) > 0,
        f"NTT: ({x}, {y}, {z}) is not a transitive triangle",
    )
    _req(min(g.degree(v) for v in (x, y, z)) >= 4, "NTT: minimum degree must be >= 4")
    outs_ok = max(g.out_degree(v) for v in (x, y, z)) <= 2
    ins_ok = max(g.in_degree(v) for v in (x, y, z)) <= 2
    _req(outs_ok or ins_ok, "NTT: needs all out-degrees <= 2 or all in-degrees <= 2")
    inside = g.multiplicity(x, y) + g.multiplicity(x, z) + g.multiplicity(y, z)
    k = 3 if inside == 3 else 2
    return ReductionRecord(ReductionKind.NTT, (x, y, z), _incident(g, (x, y, z)), k=k)


def n545_record(g: OrientedMultigraph, x: int, y: int, z: int) -> ReductionRecord:
    """Delete a 2-in 2-out vertex together with two non-adjacent degree-5
    neighbors of equal out-degree."""
    for v in (x, y, z):
        _req(g.has_vertex(v), f"N545: vertex {v} must be active")
    _req(
        g.out_degree(x) == 2 and g.in_degree(x) == 2,
        f"N545: vertex {x} needs out-degree 2 and in-degree 2",
    )
    _req(g.degree(y) == 5 and g.degree(z) == 5, "N545: neighbors need degree 5")
    _req(
        g.multiplicity(y, z) == 0 and g.multiplicity(z, y) == 0,
        f"N545: {y} and {z} must be non-adjacent",
    )
    _req(
        g.out_degree(y) == g.out_degree(z) and g.out_degree(y) in (2, 3),
        "N545: neighbors need equal out-degree 2 or 3",
    )
    for w in (y, z):
        _req(
            g.multiplicity(x, w) + g.multiplicity(w, x) > 0,
            f"N545: {x} must be adjacent to {w}",
        )
    inside = sum(
        g.multiplicity(a, b) for a in (x, y, z) for b in (x, y, z) if a != b
    )
    k = 6 - inside
    return ReductionRecord(ReductionKind.N545, (x, y, z), _incident(g, (x, y, z)), k=k)


def delx5_record(g: OrientedMultigraph, x: int) -> ReductionRecord:
    """Delete a degree-5 out-degree-2 vertex at budget 2 (composite opener)."""
    _req(g.has_vertex(x) and g.degree(x) == 5, f"DELX5: vertex {x} must have degree 5")
    _req(g.out_degree(x) == 2, f"DELX5: vertex {x} needs out-degree 2")
    return ReductionRecord(ReductionKind.DELX5, (x,), _incident(g, (x,)), k=2)


_VERTEX_BUILDERS = {
    ReductionKind.N0: n0_record,
    ReductionKind.G1: g1_record,
    ReductionKind.G2A: g2a_record,
    ReductionKind.G2B: g2b_record,
    ReductionKind.G3A: g3a_record,
    ReductionKind.G3B: g3b_record,
    ReductionKind.N3: n3_record,
    ReductionKind.G4: g4_record,
    ReductionKind.G5: g5_record,
    ReductionKind.DELX5: delx5_record,
}

#: Which focus vertices get deleted by apply(), per kind.
def _deleted_vertices(record: ReductionRecord) -> tuple[int, ...]:
    kind = record.kind
    if kind is ReductionKind.N2:
        return ()
    if kind in (ReductionKind.N55, ReductionKind.NTT, ReductionKind.N545):
        return record.focus
    if kind is ReductionKind.BASE4:
        return record.focus
    return (record.focus[0],)


# ---------------------------------------------------------------------------
# detection
# ---------------------------------------------------------------------------

def detect(g: OrientedMultigraph) -> ReductionRecord | None:
    """First applicable reduction under the fixed priority order.

    Vertex-local rules scan ids ascending; the pair rule scans arcs in
    (tail, head) order; triangle and triple rules scan lexicographically.
    Returns None exactly when the graph is irreducible.
    """
    verts = sorted(g.vertices)

    for x in verts:
        if g.degree(x) == 0:
            return n0_record(g, x)
    for x in verts:
        if g.degree(x) == 1:
            return g1_record(g, x)
    for x in verts:
        if g.degree(x) == 2 and g.out_degree(x) in (0, 2):
            return g2a_record(g, x)
    for x in verts:
        if g.degree(x) == 2 and g.out_degree(x) == 1 and not three_cycles_through(g, x):
            return g2b_record(g, x)
    for x in verts:
        if g.degree(x) == 2 and three_cycles_through(g, x):
            return n2_record(g, x)
    for x in verts:
        if g.degree(x) == 3 and g.out_degree(x) in (0, 3):
            return g3a_record(g, x)
    for x in verts:
        if g.degree(x) == 3 and g.out_degree(x) in (1, 2) and has_parallel(g, x):
            return g3b_record(g, x)
    for x in verts:
        if g.degree(x) == 3 and g.out_degree(x) in (1, 2) and not has_parallel(g, x):
            return n3_record(g, x)
    for x in verts:
        if g.degree(x) == 4 and g.out_degree(x) in (0, 1, 3, 4):
            return g4_record(g, x)
    for x in verts:
        if g.degree(x) == 5 and g.out_degree(x) in (0, 1, 4, 5):
            return g5_record(g, x)

    for u, v, _c in g.arcs():
        if (
            g.degree(u) == 5
            and g.degree(v) == 5
            and (g.out_degree(u) == 2 or g.out_degree(v) == 3)
        ):
            return n55_record(g, u, v)

    for x in verts:
        if g.degree(x) < 4:
            continue
        outs = sorted(g.out_neighbors(x))
        for y in outs:
            if g.degree(y) < 4:
                continue
            for z in outs:
                if z == y or g.degree(z) < 4 or g.multiplicity(y, z) == 0:
                    continue
                trio = (x, y, z)
                if (
                    max(g.out_degree(v) for v in trio) <= 2
                    or max(g.in_degree(v) for v in trio) <= 2
                ):
                    return ntt_record(g, x, y, z)

    for x in verts:
        if g.out_degree(x) != 2 or g.in_degree(x) != 2:
            continue
        five = sorted(w for w in g.neighbors(x) if g.degree(w) == 5)
        for i, y in enumerate(five):
            for z in five[i + 1 :]:
                if g.multiplicity(y, z) or g.multiplicity(z, y):
                    continue
                if g.out_degree(y) == g.out_degree(z) and g.out_degree(y) in (2, 3):
                    return n545_record(g, x, y, z)

    return None


# ---------------------------------------------------------------------------
# application
# ---------------------------------------------------------------------------

def apply(g: OrientedMultigraph, record: ReductionRecord) -> OrientedMultigraph:
    """Replay a record against g, returning the reduced graph.

    The input graph is left untouched.  Raises PreconditionViolatedError
    when the record does not match g (wrong degrees, wrong arc delta).
    """
    _validate(g, record)
    h = g.copy()
    for u, v, c in record.removed:
        h.remove_arc(u, v, c)
    for x in _deleted_vertices(record):
        h.remove_vertex(x)
    for u, v, c in record.added:
        h.add_arc(u, v, c)
    return h


def _validate(g: OrientedMultigraph, record: ReductionRecord) -> None:
    kind = record.kind
    if kind is ReductionKind.BASE4:
        _req(set(record.focus) == set(g.vertices), "BASE4: focus must list all vertices")
        _req(record.removed == tuple(g.arcs()), "BASE4: removed must equal all arcs")
        _req(record.added == (), "BASE4: must not add arcs")
        return
    rebuilt: ReductionRecord
    if kind in _VERTEX_BUILDERS:
        _req(len(record.focus) >= 1, f"{kind.value}: focus missing")
        rebuilt = _VERTEX_BUILDERS[kind](g, record.focus[0])
        _req(
            record.focus == rebuilt.focus,
            f"{kind.value}: focus does not match the neighborhood of {record.focus[0]}",
        )
    elif kind is ReductionKind.N2:
        _req(len(record.focus) == 3, "N2: focus must be the 3-cycle")
        rebuilt = n2_record(g, record.focus[0], cycle=record.focus)
    elif kind is ReductionKind.N55:
        _req(len(record.focus) == 2, "N55: focus must be the arc endpoints")
        rebuilt = n55_record(g, *record.focus)
    elif kind is ReductionKind.NTT:
        _req(len(record.focus) == 3, "NTT: focus must be the triangle")
        rebuilt = ntt_record(g, *record.focus)
    elif kind is ReductionKind.N545:
        _req(len(record.focus) == 3, "N545: focus must be the vertex triple")
        rebuilt = n545_record(g, *record.focus)
    else:  # pragma: no cover - enum is closed
        raise PreconditionViolatedError(f"unknown kind {kind}")
    _req(
        record.removed == rebuilt.removed,
        f"{kind.value}: removed arcs do not match the graph",
    )
    _req(record.added == rebuilt.added, f"{kind.value}: added arcs do not match")
    _req(record.k == rebuilt.k, f"{kind.value}: budget k does not match the graph")


def replay(g: OrientedMultigraph, trace: ReductionTrace) -> OrientedMultigraph:
    """Apply every record of a trace in order (including the terminal)."""
    work = g
    for record in trace.records:
        work = apply(work, record)
    if trace.base is not None:
        work = apply(work, trace.base)
    return work


# ---------------------------------------------------------------------------
# ordering lifts
# ---------------------------------------------------------------------------

def lift(record: ReductionRecord, ordering: Ordering) -> Ordering:
    """Extend an ordering of the reduced graph to the pre-graph.

    For any ordering of the reduced graph (optimal or not), the lifted
    ordering has at most k more backward arcs in the pre-graph than the
    given one has in the reduced graph.
    """
    kind = record.kind
    seq = list(ordering.sequence)

    if kind is ReductionKind.BASE4:
        if seq:
            raise OrderingMismatchError("BASE4 lifts only the empty ordering")
        return Ordering(record.focus)

    if kind is ReductionKind.N2:
        x, y, z = record.focus
        if x not in ordering or y not in ordering or z not in ordering:
            raise OrderingMismatchError("N2 lift needs the cycle vertices in place")
        seq.remove(x)
        iy = seq.index(y)
        iz = seq.index(z)
        if iz < iy:
            seq.insert(iz + 1, x)
        else:
            seq.insert(0, x)
        return Ordering(seq)

    for v in _deleted_vertices(record):
        if v in ordering:
            raise OrderingMismatchError(f"vertex {v} should be absent from the ordering")

    if kind in (ReductionKind.G1, ReductionKind.G2A, ReductionKind.G3A):
        x = record.focus[0]
        if record.removed_out(x) >= record.removed_in(x):
            seq.insert(0, x)
        else:
            seq.append(x)
    elif kind is ReductionKind.N0:
        seq.insert(0, record.focus[0])
    elif kind in (ReductionKind.G4, ReductionKind.G5):
        x = record.focus[0]
        if record.removed_out(x) >= 3:
            seq.insert(0, x)
        else:
            seq.append(x)
    elif kind is ReductionKind.N3:
        x = record.focus[0]
        if record.removed_out(x) == 2:
            seq.insert(0, x)
        else:
            seq.append(x)
    elif kind is ReductionKind.DELX5:
        seq.append(record.focus[0])
    elif kind is ReductionKind.G2B:
        x, z, y = record.focus
        iz = seq.index(z)
        iy = seq.index(y)
        if iz < iy:
            seq.insert(iz + 1, x)
        else:
            seq.insert(0, x)
    elif kind is ReductionKind.G3B:
        x, z, y = record.focus
        iz = seq.index(z)
        iy = seq.index(y)
        if iz < iy:
            seq.insert(iz + 1, x)
        elif record.removed_mult(x, y) == 2:
            seq.insert(0, x)  # parallel pair leaves x
        else:
            seq.append(x)  # parallel pair enters x
    elif kind is ReductionKind.N55:
        x, y = record.focus
        dx, dy = record.removed_out(x), record.removed_out(y)
        if dx == 3 and dy == 3:
            seq = [x, y] + seq
        elif dx == 2 and dy == 2:
            seq = seq + [x, y]
        elif dx == 2 and dy == 3:
            seq = [y] + seq + [x]
        else:
            raise InternalInvariantError(f"N55 lift: unexpected out-degrees ({dx}, {dy})")
    elif kind is ReductionKind.NTT:
        trio = list(record.focus)
        if max(record.removed_out(v) for v in trio) <= 2:
            seq = seq + trio
        elif max(record.removed_in(v) for v in trio) <= 2:
            seq = trio + seq
        else:
            raise InternalInvariantError("NTT lift: neither side condition holds")
    elif kind is ReductionKind.N545:
        x, y, z = record.focus
        before = sorted(w for w in (y, z) if record.removed_mult(w, x) > 0)
        after = sorted(w for w in (y, z) if record.removed_mult(x, w) > 0)
        trio = before + [x] + after
        if record.removed_out(y) == 2 and record.removed_out(z) == 2:
            seq = seq + trio
        elif record.removed_out(y) == 3 and record.removed_out(z) == 3:
            seq = trio + seq
        else:
            raise InternalInvariantError("N545 lift: unexpected neighbor out-degrees")
    else:  # pragma: no cover - enum is closed
        raise InternalInvariantError(f"no lift for kind {kind}")

    return Ordering(seq)
