"""Audits of the named constructions and contracts of the random generators."""
import pytest

from faskit import (
    OrientedMultigraph,
    d7_cycle_family,
    d8_cycle_family,
    exact_fas,
    gen_d7,
    gen_d8,
    gen_d14,
    gen_d24,
    gen_random,
    gen_random_regular5,
    gen_triangles,
    regularize,
)
from faskit.errors import DegreeExceedsKError, InfeasibleError


def arc_pairs(g):
    return [(u, v) for u, v, c in g.arcs() for _ in range(c)]


def assert_oriented(g):
    for u, v, _ in g.arcs():
        assert u != v
        assert g.multiplicity(v, u) == 0


def reachable(g, start):
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in g.out_neighbors(u):
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def test_d7_shape():
    g = gen_d7()
    assert (g.n, g.m) == (7, 16)
    assert [g.degree(v) for v in range(7)] == [5, 5, 4, 4, 5, 5, 4]
    assert g.degree(2) == 4  # third vertex
    assert_oriented(g)


def test_d7_family_uses_every_arc_at_most_twice():
    g = gen_d7()
    usage = {}
    for cyc in d7_cycle_family():
        for i, u in enumerate(cyc):
            arc = (u, cyc[(i + 1) % len(cyc)])
            assert g.multiplicity(*arc) == 1
            usage[arc] = usage.get(arc, 0) + 1
    assert max(usage.values()) == 2


def test_d8_shape():
    g = gen_d8()
    assert (g.n, g.m) == (8, 20)
    assert g.degree(7) == 4
    assert g.max_degree() == 6
    assert_oriented(g)


def test_d8_every_arc_on_exactly_two_family_cycles():
    g = gen_d8()
    usage = {arc: 0 for arc in arc_pairs(g)}
    for cyc in d8_cycle_family():
        for i, u in enumerate(cyc):
            usage[(u, cyc[(i + 1) % len(cyc)])] += 1
    assert set(usage.values()) == {2}
    fam = d8_cycle_family()
    assert len(fam) == 13
    assert sorted(len(c) for c in fam) == [3] * 12 + [4]


def test_d24_shape():
    g = gen_d24()
    assert (g.n, g.m) == (24, 72)
    assert all(g.degree(v) == 6 for v in g.vertices)
    assert_oriented(g)
    # the four cross 3-cycles touch pairwise disjoint vertex sets
    cross = [{label - 1, label + 7, label + 15} for label in (3, 4, 7, 8)]
    for i, a in enumerate(cross):
        for b in cross[i + 1 :]:
            assert not (a & b)


def test_d14_degree5_strong():
    g = gen_d14()
    assert (g.n, g.m) == (14, 35)
    assert all(g.degree(v) == 5 for v in g.vertices)
    assert_oriented(g)
    assert reachable(g, 0) == set(range(14))
    rev = OrientedMultigraph(14)
    for u, v, c in g.arcs():
        rev.add_arc(v, u, c)
    assert reachable(rev, 0) == set(range(14))


def test_d14_exact_ten():
    # two arc-disjoint copies of d7 force at least 10; the dp reports 10
    assert exact_fas(gen_d14())[0] == 10
    assert 10 > 2 * 14 / 3


def test_triangles():
    g = gen_triangles(4)
    assert (g.n, g.m) == (12, 12)
    assert exact_fas(g)[0] == 4
    assert gen_triangles(0).n == 0


def test_regularize_triangle_to_degree4():
    g = gen_triangles(1)
    r = regularize(g, 4)
    assert (r.n, r.m) == (6, 12)
    assert all(r.degree(v) == 4 for v in r.vertices)
    assert_oriented(r)


def test_regularize_noop_on_regular_input():
    g = gen_triangles(1)
    r = regularize(g, 2)
    assert (r.n, r.m) == (6, 6)
    # two copies, no cross arcs
    assert all(r.degree(v) == 2 for v in r.vertices)


def test_regularize_d7_to_degree5():
    r = regularize(gen_d7(), 5)
    assert r.n == 14
    assert all(r.degree(v) == 5 for v in r.vertices)
    assert r.m == 35  # 2*16 + 3 deficiency arcs


def test_regularize_rejects_high_degree():
    with pytest.raises(DegreeExceedsKError):
        regularize(gen_d7(), 4)


def test_regularize_doubles_optimum():
    for seed in range(8):
        g = gen_random(7, 4, seed=40 + seed)
        r = regularize(g, 4)
        assert exact_fas(r)[0] >= 2 * exact_fas(g)[0]


def test_gen_random_contract():
    a = gen_random(20, 5, seed=9)
    b = gen_random(20, 5, seed=9)
    c = gen_random(20, 5, seed=10)
    assert a == b
    assert a != c
    assert a.max_degree() <= 5
    assert_oriented(a)


def test_gen_random_regular5_contract():
    a = gen_random_regular5(58, seed=4)
    b = gen_random_regular5(58, seed=4)
    assert a == b
    assert all(a.degree(v) == 5 for v in a.vertices)
    assert_oriented(a)


def test_gen_random_regular5_rejects_odd():
    with pytest.raises(InfeasibleError):
        gen_random_regular5(9, seed=0)
