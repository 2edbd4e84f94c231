"""Max-degree-5 solver: partition, chain recursion, composite step, end to end."""
import pytest

from conftest import circulant
from faskit import (
    Ordering,
    OrientedMultigraph,
    exact_fas,
    gen_d7,
    gen_d8,
    gen_random,
    gen_triangles,
    solve_bounded5,
    verify_fas,
)
from faskit.bounded5 import classify_partition, composite_delete, surplus_chain
from faskit.errors import (
    BaseCaseTooLargeError,
    DegreeTooHighError,
    NotIrreducibleError,
)
from faskit.reductions import ReductionKind, apply, replay


def apply_chain(g, nice, good):
    """Apply the chain records in sequence; returns the final graph."""
    work = g
    for record in nice:
        work = apply(work, record)
    return apply(work, good)


def padded_base(gp, arcs):
    """A degree stand-in for the ambient irreducible graph."""
    base = OrientedMultigraph.from_vertices(
        sorted(set(gp.vertices) | {u for a in arcs for u in a})
    )
    for u, v, c in gp.arcs():
        base.add_arc(u, v, c)
    for u, v in arcs:
        base.add_arc(u, v)
    return base


# ---- degree partition -------------------------------------------------------

def test_partition_of_degree4_irreducible():
    part = classify_partition(circulant(9))
    assert part.deg5_out3 == () and part.deg5_out2 == ()
    assert len(part.deg4) == 9


def test_partition_with_degree5_classes():
    part = classify_partition(circulant(12, extra=[(0, 4)]))
    assert part.deg5_out3 == (0,) and part.deg5_out2 == (4,)
    assert len(part.deg4) == 10


def test_partition_rejects_reducible():
    with pytest.raises(NotIrreducibleError):
        classify_partition(gen_triangles(1))
    with pytest.raises(NotIrreducibleError):
        classify_partition(OrientedMultigraph(0))


# ---- chain recursion, one gadget per case -----------------------------------

def test_chain_immediate_surplus_at_start():
    gp = OrientedMultigraph(4)
    for v in (1, 2, 3):
        gp.add_arc(0, v)
    nice, good = surplus_chain(gp, 0, gp)
    assert nice == [] and good.kind is ReductionKind.G3A

    gp = OrientedMultigraph(3)
    gp.add_arc(0, 1, 2)
    gp.add_arc(2, 0)
    nice, good = surplus_chain(gp, 0, gp)
    assert nice == [] and good.kind is ReductionKind.G3B


def test_chain_recurses_on_degree3_neighbor():
    gp = OrientedMultigraph(7)
    gp.add_arc(0, 1)
    gp.add_arc(0, 2)
    gp.add_arc(3, 0)
    for v in (4, 5, 6):
        gp.add_arc(1, v)
    base = padded_base(gp, [])
    nice, good = surplus_chain(gp, 0, base)
    assert [r.kind for r in nice] == [ReductionKind.N3]
    assert nice[0].focus == (0,)
    assert good.kind is ReductionKind.G3A and good.focus == (1,)
    apply_chain(gp, nice, good)


def test_chain_neighbor_drops_to_degree_one():
    gp = OrientedMultigraph(5)
    gp.add_arc(0, 1)
    gp.add_arc(0, 2)
    gp.add_arc(3, 0)
    gp.add_arc(1, 4)
    base = padded_base(gp, [(1, 8), (9, 1)])
    nice, good = surplus_chain(gp, 0, base)
    assert [r.kind for r in nice] == [ReductionKind.N3]
    assert good.kind is ReductionKind.G1 and good.focus == (1,)
    apply_chain(gp, nice, good)


def test_chain_neighbor_already_degree_one():
    gp = OrientedMultigraph(4)
    gp.add_arc(0, 1)
    gp.add_arc(0, 2)
    gp.add_arc(3, 0)
    base = padded_base(gp, [(1, 8), (9, 1), (1, 10)])
    nice, good = surplus_chain(gp, 0, base)
    assert nice == []
    assert good.kind is ReductionKind.G1 and good.focus == (1,)
    apply_chain(gp, nice, good)


def test_chain_neighbor_degree_two_without_cycle():
    gp = OrientedMultigraph(6)
    gp.add_arc(0, 1)
    gp.add_arc(0, 2)
    gp.add_arc(3, 0)
    gp.add_arc(1, 4)
    gp.add_arc(1, 5)
    base = padded_base(gp, [(8, 1)])
    nice, good = surplus_chain(gp, 0, base)
    assert [r.kind for r in nice] == [ReductionKind.N3]
    assert good.kind is ReductionKind.G2A and good.focus == (1,)
    apply_chain(gp, nice, good)

    gp = OrientedMultigraph(6)
    gp.add_arc(0, 1)
    gp.add_arc(0, 2)
    gp.add_arc(3, 0)
    gp.add_arc(4, 1)
    gp.add_arc(1, 5)
    base = padded_base(gp, [(8, 1)])
    nice, good = surplus_chain(gp, 0, base)
    assert good.kind is ReductionKind.G2B and good.focus[0] == 1
    apply_chain(gp, nice, good)


def test_chain_cycle_case_one_step_route():
    # v sits on a triangle through an outside vertex u of degree 2, so
    # deleting v leaves u at odd degree 1
    gp = OrientedMultigraph(6)
    gp.add_arc(0, 1)
    gp.add_arc(0, 2)
    gp.add_arc(3, 0)
    gp.add_arc(1, 4)
    gp.add_arc(4, 5)
    gp.add_arc(5, 1)
    base = padded_base(gp, [(1, 8)])
    nice, good = surplus_chain(gp, 0, base)
    assert [r.kind for r in nice] == [ReductionKind.N3]
    assert nice[0].focus == (1,)
    assert good.kind is ReductionKind.G1 and good.focus == (4,)
    apply_chain(gp, nice, good)


def test_chain_cycle_case_two_step_route():
    # u has degree 3, so the triangle itself is stripped first
    gp = OrientedMultigraph(7)
    gp.add_arc(0, 1)
    gp.add_arc(0, 2)
    gp.add_arc(3, 0)
    gp.add_arc(1, 4)
    gp.add_arc(4, 5)
    gp.add_arc(5, 1)
    gp.add_arc(6, 4)
    base = padded_base(gp, [(1, 8)])
    nice, good = surplus_chain(gp, 0, base)
    assert [r.kind for r in nice] == [ReductionKind.N3, ReductionKind.N2]
    assert nice[1].focus == (1, 4, 5)
    assert good.kind is ReductionKind.G1 and good.focus == (4,)
    apply_chain(gp, nice, good)


def test_chain_cycle_case_two_step_route_recurses():
    # u has degree 5; after the triangle is stripped it recurses at u
    gp = OrientedMultigraph(9)
    gp.add_arc(0, 1)
    gp.add_arc(0, 2)
    gp.add_arc(3, 0)
    gp.add_arc(1, 4)
    gp.add_arc(4, 5)
    gp.add_arc(5, 1)
    gp.add_arc(6, 4)
    gp.add_arc(4, 7)
    gp.add_arc(8, 4)
    base = padded_base(gp, [(1, 10), (6, 11), (6, 12), (13, 6)])
    nice, good = surplus_chain(gp, 0, base)
    assert [r.kind for r in nice] == [ReductionKind.N3, ReductionKind.N2]
    assert good.kind is ReductionKind.G1 and good.focus == (6,)
    apply_chain(gp, nice, good)


def test_chain_clique_case_matches_expected_records():
    # q's neighborhood is a directed triangle forming a clique with q
    gp = OrientedMultigraph(4)
    gp.add_arc(0, 1)
    gp.add_arc(0, 2)
    gp.add_arc(3, 0)
    gp.add_arc(1, 2)
    gp.add_arc(2, 3)
    gp.add_arc(3, 1)
    base = padded_base(gp, [(1, 8), (9, 1), (2, 8), (10, 3)])
    assert base.degree(1) == 5 and base.degree(2) == 4 and base.degree(3) == 4
    nice, good = surplus_chain(gp, 0, base)
    assert [r.kind for r in nice] == [ReductionKind.N3]
    assert nice[0].focus == (2,)
    assert good.kind is ReductionKind.G2B and good.focus[0] == 0
    apply_chain(gp, nice, good)


def test_chain_clique_case_mirror_orientation():
    gp = OrientedMultigraph(4)
    gp.add_arc(1, 0)
    gp.add_arc(2, 0)
    gp.add_arc(0, 3)
    gp.add_arc(1, 3)
    gp.add_arc(3, 2)
    gp.add_arc(2, 1)
    base = padded_base(gp, [(1, 8), (9, 1), (2, 8), (10, 3)])
    nice, good = surplus_chain(gp, 0, base)
    assert [r.kind for r in nice] == [ReductionKind.N3]
    assert nice[0].focus == (2,)
    assert good.kind is ReductionKind.G2B and good.focus[0] == 0
    apply_chain(gp, nice, good)


def test_chain_clique_case_recursive_branch():
    # extra arc keeps b at degree 3 after q is removed, forcing recursion
    gp = OrientedMultigraph(7)
    gp.add_arc(0, 1)
    gp.add_arc(0, 2)
    gp.add_arc(3, 0)
    gp.add_arc(1, 2)
    gp.add_arc(2, 3)
    gp.add_arc(3, 1)
    gp.add_arc(2, 6)
    base = padded_base(gp, [(1, 8), (9, 1), (10, 3)])
    nice, good = surplus_chain(gp, 0, base)
    assert nice[0].kind is ReductionKind.N3 and nice[0].focus == (0,)
    final = apply_chain(gp, nice, good)
    assert good.kind.surplus
    assert final.n < gp.n


def test_chain_budget_arithmetic():
    # every nice record removes exactly 3 arcs at k=1; the good record
    # nets at least 3k+1
    gp = OrientedMultigraph(7)
    gp.add_arc(0, 1)
    gp.add_arc(0, 2)
    gp.add_arc(3, 0)
    gp.add_arc(1, 4)
    gp.add_arc(4, 5)
    gp.add_arc(5, 1)
    gp.add_arc(6, 4)
    base = padded_base(gp, [(1, 8)])
    nice, good = surplus_chain(gp, 0, base)
    for record in nice:
        assert record.removed_total - record.added_total == 3
        assert record.k == 1
    assert good.removed_total - good.added_total >= 3 * good.k + 1


# ---- composite step ---------------------------------------------------------

def test_composite_delete_on_irreducible_instance():
    g = circulant(12, extra=[(0, 4)])
    records = composite_delete(g, 4)
    assert records[0].kind is ReductionKind.DELX5
    assert records[-1].kind.surplus
    work = g
    for record in records:
        work = apply(work, record)
    net = sum(r.removed_total - r.added_total for r in records)
    assert net >= 3 * sum(r.k for r in records)


def test_composite_delete_requires_degree4_out_neighbor():
    from faskit.errors import InternalInvariantError

    # x is degree-5 with out-degree 2, but both out-neighbors are degree 5
    g = OrientedMultigraph(10)
    g.add_arc(0, 1)
    g.add_arc(0, 2)
    for v in (3, 4, 5):
        g.add_arc(v, 0)
    for y in (1, 2):
        for v in (6, 7):
            g.add_arc(v, y)
        g.add_arc(y, 8)
        g.add_arc(y, 9)
    assert g.degree(1) == g.degree(2) == 5
    with pytest.raises(InternalInvariantError):
        composite_delete(g, 0)


def test_composite_delete_parallel_out_pair():
    # x has both out-arcs to the same degree-4 vertex y
    g = OrientedMultigraph(8)
    g.add_arc(0, 1, 2)
    for v in (2, 3, 4):
        g.add_arc(v, 0)
    g.add_arc(1, 5)
    g.add_arc(1, 6)
    records = composite_delete(g, 0)
    assert [r.kind for r in records] == [ReductionKind.DELX5, ReductionKind.G2A]
    assert records[1].focus == (1,)


# ---- full solver ------------------------------------------------------------

def test_solve_d7_exactly_five():
    g = gen_d7()
    ordering, fas, trace = solve_bounded5(g)
    assert fas.size == 5
    assert verify_fas(g, fas)


def test_solve_triangles_tight():
    for t in (1, 3, 10):
        g = gen_triangles(t)
        _, fas, _ = solve_bounded5(g)
        assert fas.size == t == g.m // 3


def test_solve_empty():
    ordering, fas, trace = solve_bounded5(OrientedMultigraph(0))
    assert len(ordering) == 0 and fas.size == 0
    assert trace.records == () and trace.base is None


def test_solve_rejects_degree_six():
    with pytest.raises(DegreeTooHighError):
        solve_bounded5(gen_d8())


def test_solve_degree4_base_case_uses_oracle():
    g = circulant(9)
    ordering, fas, trace = solve_bounded5(g)
    assert trace.records == () and trace.base is not None
    assert trace.base.k == fas.size == exact_fas(g)[0]


def test_solve_base_case_cap():
    g = circulant(12)
    with pytest.raises(BaseCaseTooLargeError):
        solve_bounded5(g, oracle_cap=11)
    _, fas, _ = solve_bounded5(g, oracle_cap=12)
    assert verify_fas(g, fas)


def test_solve_composite_instances():
    for n, extra in ((12, [(0, 4)]), (16, [(0, 4), (8, 12)]), (24, [(0, 4), (12, 16)])):
        g = circulant(n, extra=extra)
        ordering, fas, trace = solve_bounded5(g)
        assert verify_fas(g, fas)
        assert fas.size <= g.m // 3
        assert any(r.kind is ReductionKind.DELX5 for r in trace.records)


def test_trace_replays_and_budget_bounds_size():
    g = circulant(16, extra=[(0, 4), (8, 12)])
    ordering, fas, trace = solve_bounded5(g)
    final = replay(g, trace)
    assert final.n == 0 and final.m == 0
    assert fas.size <= trace.total_budget()


def test_trace_lifting_reproduces_ordering():
    from faskit.reductions import lift

    g = circulant(12, extra=[(0, 4)])
    ordering, fas, trace = solve_bounded5(g)
    rebuilt = Ordering(trace.base.focus if trace.base else ())
    for record in reversed(trace.records):
        rebuilt = lift(record, rebuilt)
    assert rebuilt == ordering


def test_solver_never_beats_oracle():
    for seed in range(25):
        g = gen_random(11, 5, seed=7000 + seed)
        _, fas, _ = solve_bounded5(g)
        assert fas.size >= exact_fas(g)[0]


def test_solver_random_guarantee_sweep():
    for seed in range(150):
        n = 5 + seed % 40
        g = gen_random(n, 5, seed=seed, target_arcs=(5 * n) // 2 if seed % 2 else n)
        _, fas, _ = solve_bounded5(g)
        assert fas.size <= g.m // 3
        assert verify_fas(g, fas)


def rewired_irreducible(n, seed, chords):
    """Chorded circulant randomized by degree-preserving double-arc swaps
    that keep the graph irreducible."""
    import random

    from faskit.errors import FaskitError
    from faskit.reductions import detect

    rng = random.Random(seed)
    spacing = n // chords
    g = circulant(n, extra=[(i * spacing, (i * spacing + 4) % n) for i in range(chords)])
    if detect(g) is not None:
        return None
    for _ in range(30):
        arcs = [(u, v) for u, v, c in g.arcs() for _ in range(c)]
        (a, b), (c, d) = rng.sample(arcs, 2)
        if len({a, b, c, d}) != 4:
            continue
        h = g.copy()
        try:
            h.remove_arc(a, b)
            h.remove_arc(c, d)
            h.add_arc(a, d)
            h.add_arc(c, b)
        except FaskitError:
            continue
        if detect(h) is None:
            g = h
    return g


def test_solver_on_rewired_irreducible_instances():
    from faskit.reductions import detect

    solved = 0
    composite = 0
    for seed in range(40):
        n = 18 + 6 * (seed % 5)
        g = rewired_irreducible(n, seed, chords=1 + seed % 3)
        if g is None:
            continue
        assert detect(g) is None
        _, fas, trace = solve_bounded5(g)
        assert verify_fas(g, fas) and fas.size <= g.m // 3
        solved += 1
        if any(r.kind is ReductionKind.DELX5 for r in trace.records):
            composite += 1
    assert solved >= 30 and composite >= 30
