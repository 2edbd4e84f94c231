"""Closed-form upper bounds and the coefficient table for small degrees.

Two classical bound families are evaluated: Berger's degree-sum bound
(per arc) and Alon's probabilistic bound, plus the per-vertex form the
degree-sum bound takes on degree-k graphs.  The coefficient table holds
the best known constants c (per arc) and c'' (per vertex) for maximum
degree 2 through 6, some exact and some only bracketed.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

_SQRT6_OVER_40 = math.sqrt(6.0) / 40.0


def berger_bound(degrees: list[int]) -> float:
    """m/2 - (sqrt(6)/40) * sum of sqrt(degree) over all vertices."""
    if any(d < 0 for d in degrees):
        raise ValueError("degrees must be non-negative")
    m = sum(degrees) / 2.0
    return m / 2.0 - _SQRT6_OVER_40 * sum(math.sqrt(d) for d in degrees)


def alon_bound(m: int, delta: int) -> float:
    """(1/2 - 1/(16 sqrt(delta))) * m for maximum degree delta >= 1."""
    if m < 0 or delta < 1:
        raise ValueError("need m >= 0 and delta >= 1")
    return (0.5 - 1.0 / (16.0 * math.sqrt(delta))) * m


def vertex_bound(n: int, k: int) -> float:
    """(k/4 - (sqrt(6)/40) sqrt(k)) * n, the per-vertex degree-sum bound."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    return (k / 4.0 - _SQRT6_OVER_40 * math.sqrt(k)) * n


def combined_bound(n: int, m: int, k: int) -> float:
    """The smaller of the per-vertex and Alon bounds for max degree k."""
    return min(vertex_bound(n, k), alon_bound(m, k))


@dataclass(frozen=True)
class CoefficientBound:
    """An exact value, a closed interval, or a one-sided lower bound."""

    kind: str  # "exact" | "range" | "at_least"
    low: Fraction
    high: Fraction | None = None

    @property
    def value(self) -> Fraction:
        if self.kind != "exact":
            raise ValueError(f"coefficient is not exact ({self.kind})")
        return self.low


def coefficient_table() -> dict[int, dict[str, CoefficientBound]]:
    """Best known fas coefficients per arc and per vertex, max degree 2..6."""
    exact = lambda a, b: CoefficientBound("exact", Fraction(a, b))
    return {
        2: {"per_arc": exact(1, 3), "per_vertex": exact(1, 3)},
        3: {"per_arc": exact(1, 3), "per_vertex": exact(1, 3)},
        4: {"per_arc": exact(1, 3), "per_vertex": exact(2, 3)},
        5: {
            "per_arc": exact(1, 3),
            "per_vertex": CoefficientBound(
                "range", Fraction(5, 7), Fraction(24, 29)
            ),
        },
        6: {
            "per_arc": CoefficientBound("at_least", Fraction(25, 72)),
            "per_vertex": CoefficientBound("at_least", Fraction(75, 72)),
        },
    }
