"""Solver for oriented multigraphs of maximum degree 5.

The loop applies budgeted reductions until the graph is irreducible.
An irreducible graph splits by degree into three classes: degree-5
vertices of out-degree 3, degree-4 vertices (necessarily 2-in 2-out),
and degree-5 vertices of out-degree 2.  While the last class is
nonempty, one of its members is deleted at budget 2 and the overshoot
is recovered by a chain of budget-neutral deletions ending in a
G-rule, so the whole block nets at least three removed arcs per unit
of budget.  Once only degree-4 vertices remain, each weakly connected
component is solved exactly.  Lifting the trace in reverse yields an
ordering whose backward arcs number at most floor(m / 3).
"""
from __future__ import annotations

from dataclasses import dataclass

from . import reductions as rd
from .errors import (
    BaseCaseTooLargeError,
    DegreeTooHighError,
    InternalInvariantError,
    NotIrreducibleError,
    TooLargeError,
)
from .exact import DEFAULT_CAP, exact_fas
from .graph import (
    FeedbackArcSet,
    Ordering,
    OrientedMultigraph,
    backward_arcs,
    induced_subgraph,
    three_cycles_through,
    verify_fas,
)


@dataclass(frozen=True)
class DegreePartition:
    """Vertex classes of an irreducible graph, by degree and out-degree."""

    deg5_out3: tuple[int, ...]
    deg4: tuple[int, ...]
    deg5_out2: tuple[int, ...]


def classify_partition(g: OrientedMultigraph) -> DegreePartition:
    """Split an irreducible graph into its three degree classes.

    Checks the structural facts the composite step relies on: the two
    degree-5 classes have equal size and are independent, and no arc
    runs from the out-degree-2 class to the out-degree-3 class.
    """
    if g.n == 0 or rd.detect(g) is not None:
        raise NotIrreducibleError("graph is empty or still admits a reduction")
    out3, four, out2 = [], [], []
    for v in sorted(g.vertices):
        d, dp = g.degree(v), g.out_degree(v)
        if d == 4 and dp == 2:
            four.append(v)
        elif d == 5 and dp == 3:
            out3.append(v)
        elif d == 5 and dp == 2:
            out2.append(v)
        else:
            raise InternalInvariantError(
                f"irreducible graph has vertex {v} with degree {d}, out-degree {dp}"
            )
    if len(out3) != len(out2):
        raise InternalInvariantError("degree-5 classes differ in size")
    for group in (out3, out2):
        gset = set(group)
        for v in group:
            if gset & g.neighbors(v):
                raise InternalInvariantError("a degree-5 class is not independent")
    out3set = set(out3)
    for v in out2:
        if out3set & set(g.out_neighbors(v)):
            raise InternalInvariantError("arc from out-degree-2 class to out-degree-3 class")
    return DegreePartition(tuple(out3), tuple(four), tuple(out2))


def surplus_chain(
    gp: OrientedMultigraph, q: int, base: OrientedMultigraph
) -> tuple[list[rd.ReductionRecord], rd.ReductionRecord]:
    """Chain of N2/N3 deletions from a degree-3 vertex ending in a G-rule.

    ``gp`` must be a subgraph of the irreducible graph ``base`` (which is
    consulted only for degrees), with q of degree 3 in gp.  The returned
    records apply in sequence: zero or more budget-neutral deletions
    followed by exactly one surplus rule.  The case analysis is driven by
    structural facts of irreducible graphs; if one fails to hold the
    input violated the contract and InternalInvariantError is raised.
    """
    if not gp.has_vertex(q) or gp.degree(q) != 3:
        raise InternalInvariantError(f"chain start {q} must have degree 3")

    # A surplus rule at q itself ends the chain immediately.
    if gp.out_degree(q) in (0, 3):
        return [], rd.g3a_record(gp, q)
    if rd.has_parallel(gp, q):
        return [], rd.g3b_record(gp, q)

    nbrs = sorted(gp.neighbors(q))
    if len(nbrs) != 3:
        raise InternalInvariantError(f"vertex {q} must have three distinct neighbors")
    deg4 = [v for v in nbrs if base.degree(v) == 4]
    if not deg4:
        raise InternalInvariantError(
            f"no neighbor of {q} has degree 4 in the base graph"
        )
    v = deg4[0]

    n3q = rd.n3_record(gp, q)
    without_q = rd.apply(gp, n3q)
    dv = without_q.degree(v)

    if dv == 3:
        nice, good = surplus_chain(without_q, v, base)
        return [n3q] + nice, good
    if dv == 0:
        # v's only arc went to q; take the G-rule at v in gp directly.
        return [], rd.g1_record(gp, v)
    if dv == 1:
        return [n3q], rd.g1_record(without_q, v)

    cycles = three_cycles_through(without_q, v)
    if not cycles:
        if without_q.out_degree(v) in (0, 2):
            return [n3q], rd.g2a_record(without_q, v)
        return [n3q], rd.g2b_record(without_q, v)

    cycle = cycles[0]
    cycle_set = set(cycle)
    if not cycle_set <= set(nbrs):
        # Some cycle vertex is not adjacent to q; peel it via one of two
        # one-step routes, whichever leaves it with odd degree <= 3.
        u = min(cycle_set - set(nbrs))
        d1 = gp.degree(u) - gp.multiplicity(u, v) - gp.multiplicity(v, u)
        d2 = without_q.degree(u) - 2
        if d1 % 2 == 1 and d1 <= 3:
            n3v = rd.n3_record(gp, v)
            without_v = rd.apply(gp, n3v)
            if d1 == 1:
                return [n3v], rd.g1_record(without_v, u)
            nice, good = surplus_chain(without_v, u, base)
            return [n3v] + nice, good
        if d2 % 2 == 1 and d2 <= 3:
            n2v = rd.n2_record(without_q, v, cycle=cycle)
            stripped = rd.apply(without_q, n2v)
            if d2 == 1:
                return [n3q, n2v], rd.g1_record(stripped, u)
            nice, good = surplus_chain(stripped, u, base)
            return [n3q, n2v] + nice, good
        raise InternalInvariantError(
            f"neither route leaves {u} with odd degree at most 3"
        )

    # The cycle equals q's neighborhood: {q} + cycle is a clique in gp.
    succ = {cycle[0]: cycle[1], cycle[1]: cycle[2], cycle[2]: cycle[0]}
    pred = {s: p for p, s in succ.items()}
    if gp.out_degree(q) == 2:
        cc = gp.in_neighbors(q)[0]
        aa = succ[cc]
        bb = succ[aa]
        if gp.multiplicity(q, aa) == 0 or gp.multiplicity(q, bb) == 0:
            raise InternalInvariantError("clique case: expected arcs from q missing")
    else:
        cc = gp.out_neighbors(q)[0]
        aa = pred[cc]
        bb = succ[cc]
        if gp.multiplicity(aa, q) == 0 or gp.multiplicity(bb, q) == 0:
            raise InternalInvariantError("clique case: expected arcs into q missing")
    if base.degree(bb) != 4:
        raise InternalInvariantError(f"clique case: {bb} is not degree 4 in the base")

    if without_q.degree(bb) == 3:
        nice, good = surplus_chain(without_q, bb, base)
        return [n3q] + nice, good

    n3b = rd.n3_record(gp, bb)
    without_b = rd.apply(gp, n3b)
    return [n3b], rd.g2b_record(without_b, q)


def composite_delete(g: OrientedMultigraph, x: int) -> list[rd.ReductionRecord]:
    """Records deleting an out-degree-2 degree-5 vertex at breakeven budget.

    Opens with the budget-2 deletion of x, then compensates: either a
    single G2A (when x had a parallel out-pair) or a surplus chain from
    a degree-4 out-neighbor.  The block as a whole removes at least
    three arcs per unit of budget, which the caller may treat exactly
    like one budget-neutral rule.
    """
    opener = rd.delx5_record(g, x)
    outs = sorted(g.out_neighbors(x))
    deg4_outs = [y for y in outs if g.degree(y) == 4]
    if not deg4_outs:
        raise InternalInvariantError(f"vertex {x} has no degree-4 out-neighbor")
    work = rd.apply(g, opener)
    parallel = [y for y in deg4_outs if g.multiplicity(x, y) == 2]
    if parallel:
        records = [opener, rd.g2a_record(work, parallel[0])]
    else:
        nice, good = surplus_chain(work, deg4_outs[0], g)
        records = [opener] + nice + [good]
    net = sum(r.removed_total - r.added_total for r in records)
    budget = sum(r.k for r in records)
    if net < 3 * budget:
        raise InternalInvariantError(
            f"composite block removes {net} arcs on budget {budget}"
        )
    return records


def _weak_components(g: OrientedMultigraph) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for start in sorted(g.vertices):
        if start in seen:
            continue
        stack = [start]
        comp = []
        while stack:
            u = stack.pop()
            if u in seen:
                continue
            seen.add(u)
            comp.append(u)
            stack.extend(g.neighbors(u) - seen)
        comps.append(sorted(comp))
    return comps


def solve_bounded5(
    g: OrientedMultigraph, oracle_cap: int = DEFAULT_CAP
) -> tuple[Ordering, FeedbackArcSet, rd.ReductionTrace]:
    """Feedback arc set of size at most floor(m / 3) for max degree 5.

    Returns the ordering, its backward arcs, and the reduction trace.
    Irreducible degree-4 remainders are solved exactly per weakly
    connected component; a component larger than ``oracle_cap`` raises
    BaseCaseTooLargeError rather than silently degrading.
    """
    if g.max_degree() > 5:
        raise DegreeTooHighError(f"max degree {g.max_degree()} exceeds 5")

    work = g.copy()
    records: list[rd.ReductionRecord] = []
    base: rd.ReductionRecord | None = None
    base_ordering: tuple[int, ...] = ()

    while work.n > 0:
        record = rd.detect(work)
        if record is not None:
            work = rd.apply(work, record)
            records.append(record)
            continue
        partition = classify_partition(work)
        if partition.deg5_out2:
            for block_record in composite_delete(work, partition.deg5_out2[0]):
                work = rd.apply(work, block_record)
                records.append(block_record)
            continue
        # degree-4 remainder: solve each weak component exactly
        sequence: list[int] = []
        total = 0
        for comp in _weak_components(work):
            if len(comp) > oracle_cap:
                raise BaseCaseTooLargeError(
                    f"irreducible degree-4 component has {len(comp)} vertices "
                    f"(cap {oracle_cap})"
                )
            try:
                size, comp_ord = exact_fas(induced_subgraph(work, comp), oracle_cap)
            except TooLargeError as exc:  # pragma: no cover - guarded above
                raise BaseCaseTooLargeError(str(exc)) from exc
            sequence.extend(comp_ord.sequence)
            total += size
        base_ordering = tuple(sequence)
        base = rd.ReductionRecord(
            rd.ReductionKind.BASE4, base_ordering, tuple(work.arcs()), k=total
        )
        break

    trace = rd.ReductionTrace(tuple(records), base)

    ordering = Ordering(base_ordering)
    for record in reversed(records):
        ordering = rd.lift(record, ordering)

    fas = backward_arcs(g, ordering)
    if fas.size > g.m // 3:
        raise InternalInvariantError(
            f"certified bound violated: {fas.size} > {g.m // 3}"
        )
    if not verify_fas(g, fas):
        raise InternalInvariantError("backward arcs do not form a feedback arc set")
    return ordering, fas, trace
