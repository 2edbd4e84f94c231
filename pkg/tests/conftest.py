"""Shared test instances and the acceptance summary hook."""
from faskit import OrientedMultigraph

#: pass/fail lines produced by test_acceptance, replayed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def circulant(n: int, jumps=(1, 3), extra=()) -> OrientedMultigraph:
    """Circulant digraph i -> i+j for j in jumps, plus explicit extra arcs.

    With jumps (1, 3) and n >= 7 this is 4-regular with one arc in and
    two out per jump direction, has no transitive triangles, and admits
    no reduction.  Adding a chord u -> u+4 turns u into a degree-5
    out-degree-3 vertex and u+4 into a degree-5 out-degree-2 vertex
    while staying irreducible, which reaches the composite solver path.
    """
    g = OrientedMultigraph(n)
    for i in range(n):
        for j in jumps:
            g.add_arc(i, (i + j) % n)
    for u, v in extra:
        g.add_arc(u, v)
    return g


def disjoint_union(a: OrientedMultigraph, b: OrientedMultigraph) -> OrientedMultigraph:
    """Relabeled union; b's ids are shifted past a's."""
    na = max(a.vertices, default=-1) + 1
    g = OrientedMultigraph(na + max(b.vertices, default=-1) + 1)
    for u, v, c in a.arcs():
        g.add_arc(u, v, c)
    for u, v, c in b.arcs():
        g.add_arc(u + na, v + na, c)
    return g
