"""Exact minimum feedback arc set and cycle-family lower bounds.

The exact solver runs a dynamic program over vertex subsets: processing
subsets as growing prefixes of an ordering, ``dp[S]`` is the minimum
number of backward arcs among orderings of the induced subgraph on S,
via ``dp[S] = min over v in S of dp[S - v] + w(v -> S - v)`` where w is
the multiplicity-weighted arc count from v into the rest of the prefix.
Strata of equal popcount are independent, so each stratum is evaluated
as a vectorized numpy pass; the table itself is one uint8 cell per
subset (values never exceed m, which is capped at 255).
"""
from __future__ import annotations

import numpy as np

from .errors import InternalInvariantError, NotACycleError, TooLargeError
from .graph import Ordering, OrientedMultigraph

DEFAULT_CAP = 24

_LOW_BITS = 12
_LOW_MASK = (1 << _LOW_BITS) - 1


def _masks_by_popcount(n_bits: int) -> list[np.ndarray]:
    """All n_bits-wide masks grouped by popcount, each group sorted."""
    groups: list[list[int]] = [[] for _ in range(n_bits + 1)]
    for mask in range(1 << n_bits):
        groups[bin(mask).count("1")].append(mask)
    return [np.asarray(grp, dtype=np.uint32) for grp in groups]


def _weight_tables(weights: list[list[int]], n: int, n_low: int, n_high: int):
    """Per-vertex subset-sum tables over the low/high bit halves."""
    wlo = np.zeros((n, 1 << n_low), dtype=np.uint16)
    whi = np.zeros((n, 1 << max(n_high, 1)), dtype=np.uint16)
    for v in range(n):
        row = weights[v]
        tlo = wlo[v]
        for j in range(n_low):
            bit = 1 << j
            tlo[bit : bit << 1] = tlo[:bit] + row[j]
        thi = whi[v]
        for j in range(n_high):
            bit = 1 << j
            thi[bit : bit << 1] = thi[:bit] + row[n_low + j]
    return wlo, whi


def exact_fas(g: OrientedMultigraph, cap: int = DEFAULT_CAP) -> tuple[int, Ordering]:
    """Exact minimum feedback arc set size and one optimal ordering.

    Exponential in n; refuses instances with more than ``cap`` vertices.
    """
    verts = sorted(g.vertices)
    n = len(verts)
    if n > cap:
        raise TooLargeError(f"{n} vertices exceed the exact-solver cap of {cap}")
    if g.m > 255:
        raise TooLargeError("arc count exceeds the dp value range (255)")
    if n == 0:
        return 0, Ordering(())

    index = {v: i for i, v in enumerate(verts)}
    weights = [[0] * n for _ in range(n)]
    for u, v, c in g.arcs():
        weights[index[u]][index[v]] = c

    n_low = min(n, _LOW_BITS)
    n_high = n - n_low
    wlo, whi = _weight_tables(weights, n, n_low, n_high)
    lo_groups = _masks_by_popcount(n_low)
    hi_groups = _masks_by_popcount(n_high)

    dp = np.empty(1 << n, dtype=np.uint8)
    dp[0] = 0
    bits = np.uint32(1) << np.arange(n, dtype=np.uint32)

    for k in range(1, n + 1):
        for jhi in range(max(0, k - n_low), min(n_high, k) + 1):
            his = hi_groups[jhi]
            los = lo_groups[k - jhi]
            if his.size == 0 or los.size == 0:
                continue
            subsets = ((his[:, None] << np.uint32(n_low)) | los[None, :]).ravel()
            best = np.full(subsets.size, 0xFFFF, dtype=np.uint16)
            for v in range(n):
                sel = (subsets & bits[v]) != 0
                if not sel.any():
                    continue
                rest = subsets[sel] ^ bits[v]
                cand = (
                    dp[rest].astype(np.uint16)
                    + wlo[v][rest & _LOW_MASK]
                    + whi[v][rest >> _LOW_BITS]
                )
                # subset indices inside `sel` are unique, so a masked
                # minimum is safe (no unbuffered scatter needed)
                best[sel] = np.minimum(best[sel], cand)
            dp[subsets] = best.astype(np.uint8)

    full = (1 << n) - 1
    size = int(dp[full])

    # Reconstruct one optimal ordering by peeling the last prefix vertex.
    def cost(v: int, rest: int) -> int:
        return int(wlo[v][rest & _LOW_MASK]) + int(whi[v][rest >> _LOW_BITS])

    order_rev = []
    s = full
    while s:
        for v in range(n):
            bit = 1 << v
            if s & bit:
                rest = s ^ bit
                if int(dp[s]) == int(dp[rest]) + cost(v, rest):
                    order_rev.append(v)
                    s = rest
                    break
        else:
            raise InternalInvariantError("dp backtracking found no predecessor")

    ordering = Ordering(verts[i] for i in reversed(order_rev))
    return size, ordering


def _check_cycle(g: OrientedMultigraph, cycle: tuple[int, ...] | list[int]) -> list[tuple[int, int]]:
    """Validate one directed cycle and return its arc pairs."""
    if len(cycle) < 2:
        raise NotACycleError(f"cycle {cycle!r} is too short")
    if len(set(cycle)) != len(cycle):
        raise NotACycleError(f"cycle {cycle!r} repeats a vertex")
    arcs = []
    for i, u in enumerate(cycle):
        v = cycle[(i + 1) % len(cycle)]
        if not g.has_vertex(u) or not g.has_vertex(v) or g.multiplicity(u, v) == 0:
            raise NotACycleError(f"cycle {cycle!r} uses missing arc ({u}, {v})")
        arcs.append((u, v))
    return arcs


def cycle_family_bound(g: OrientedMultigraph, family: list) -> int:
    """Lower bound on the minimum feedback arc set from a cycle family.

    Every feedback arc set must break each listed cycle, while killing
    one arc position breaks at most r cycles, where r is the maximum
    number of family cycles sharing an arc.  Hence ceil(|family| / r).
    """
    if not family:
        return 0
    usage: dict[tuple[int, int], int] = {}
    for cycle in family:
        for arc in _check_cycle(g, cycle):
            usage[arc] = usage.get(arc, 0) + 1
    r = max(usage.values())
    return -(-len(family) // r)
