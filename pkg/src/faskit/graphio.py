"""Bit-exact text formats for graphs, orderings, certificates and traces.

Graph format: UTF-8 lines, ``#`` starts a comment (rest of line is
ignored), the first data line is ``n m``, followed by exactly m lines
``u v`` with 0-based vertex ids; an arc of multiplicity c appears as c
identical lines.  Canonical output sorts arcs lexicographically, so
write(parse(text)) normalizes and parse(write(g)) is the identity.

A feedback-arc-set file is arc lines only (no header), repeated per
count.  An ordering is a single line of ids.  A trace is one record per
line: ``<kind> k=<k> focus=<ids> removed=<arcs> added=<arcs>`` with
arcs rendered as ``(u v)`` repeated per multiplicity.
"""
from __future__ import annotations

from .errors import ParseError
from .graph import FeedbackArcSet, Ordering, OrientedMultigraph
from .reductions import ReductionRecord, ReductionTrace


def _data_lines(text: str) -> list[tuple[int, str]]:
    """(line number, content) pairs with comments and blanks stripped."""
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((i, line))
    return out


def _parse_int_pair(line_no: int, line: str) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise ParseError(line_no, f"expected two fields, got {len(parts)}")
    try:
        a, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(line_no, f"non-integer field in {line!r}") from None
    return a, b


def parse_graph(text: str) -> OrientedMultigraph:
    lines = _data_lines(text)
    if not lines:
        raise ParseError(1, "missing header line 'n m'")
    head_no, head = lines[0]
    n, m = _parse_int_pair(head_no, head)
    if n < 0 or m < 0:
        raise ParseError(head_no, "n and m must be non-negative")
    body = lines[1:]
    if len(body) != m:
        raise ParseError(
            head_no, f"header announces {m} arcs but {len(body)} data lines follow"
        )
    g = OrientedMultigraph(n)
    for line_no, line in body:
        u, v = _parse_int_pair(line_no, line)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(line_no, f"vertex id out of range [0, {n})")
        g.add_arc(u, v)  # LoopArcError / TwoCycleError surface as-is
    return g


def write_graph(g: OrientedMultigraph) -> str:
    verts = sorted(g.vertices)
    if verts != list(range(len(verts))):
        raise ValueError("only graphs with dense ids 0..n-1 can be serialized")
    lines = [f"{g.n} {g.m}"]
    for u, v, c in g.arcs():
        lines.extend([f"{u} {v}"] * c)
    return "\n".join(lines) + "\n"


def parse_fas(text: str) -> FeedbackArcSet:
    counts: dict[tuple[int, int], int] = {}
    for line_no, line in _data_lines(text):
        u, v = _parse_int_pair(line_no, line)
        counts[(u, v)] = counts.get((u, v), 0) + 1
    return FeedbackArcSet(counts)


def write_fas(fas: FeedbackArcSet) -> str:
    lines = []
    for u, v, c in fas.items():
        lines.extend([f"{u} {v}"] * c)
    return "\n".join(lines) + "\n" if lines else ""


def parse_ordering(text: str) -> Ordering:
    lines = _data_lines(text)
    if len(lines) > 1:
        raise ParseError(lines[1][0], "ordering must be a single line")
    if not lines:
        return Ordering(())
    line_no, line = lines[0]
    try:
        ids = tuple(int(tok) for tok in line.split())
    except ValueError:
        raise ParseError(line_no, "non-integer vertex id") from None
    return Ordering(ids)


def write_ordering(ordering: Ordering) -> str:
    return " ".join(str(v) for v in ordering.sequence) + "\n"


def _arc_list(arcs: tuple[tuple[int, int, int], ...]) -> str:
    return "".join(f"({u} {v})" * c for u, v, c in arcs)


def format_record(record: ReductionRecord) -> str:
    return (
        f"{record.kind.value} k={record.k}"
        f" focus={','.join(str(v) for v in record.focus)}"
        f" removed={_arc_list(record.removed)}"
        f" added={_arc_list(record.added)}"
    )


def write_trace(trace: ReductionTrace) -> str:
    lines = [format_record(r) for r in trace.records]
    if trace.base is not None:
        lines.append(format_record(trace.base))
    return "\n".join(lines) + "\n" if lines else ""
