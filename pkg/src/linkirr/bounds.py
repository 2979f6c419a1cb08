"""Closed-form bounds on link-irregular graphs, evaluated exactly.

Everything here is integer or :class:`fractions.Fraction` arithmetic except
:func:`moment_estimates`, whose exponentials are ordinary floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

# Vertices a graph needs before every link type of order <= 6 is used up:
# 1 + 2 + 4 + 11 + 34 + 156.
LINK_TYPES_UP_TO_6 = 208
PLANAR_THRESHOLD = 277


def _pairs(k: int) -> int:
    return k * (k - 1) // 2


def g_lower_bound(r: int) -> Fraction:
    """``2^C(r,2) / r!``: labeled graphs on r vertices over relabelings."""
    if r < 0:
        raise ValueError("r must be non-negative")
    return Fraction(2 ** _pairs(r), math.factorial(r))


def g_exact(r: int) -> int:
    """Number of isomorphism classes of graphs on r vertices (r <= 9)."""
    from .enumeration import ENUMERATION_LIMIT, EnumerationLimitError, catalog_codes

    if r < 0:
        raise ValueError("r must be non-negative")
    if r > ENUMERATION_LIMIT:
        raise EnumerationLimitError(f"g_exact limited to r <= {ENUMERATION_LIMIT}")
    return len(catalog_codes(r))


def edge_lower(n: int) -> int:
    return 2 * n - 5


def edge_upper(n: int) -> int:
    return (2 * n * n - 5 * n + 4) // 4


def asymptotic_edge_lower(n: int) -> int:
    """Edge floor from packing links of orders 1..k as cheaply as possible.

    ``k`` is chosen with ``2^C(k,2) <= n < 2^C(k+1,2)``; the value is
    ``ceil((k n - sum_{d<k} (k - d) 2^C(d,2)) / 2)``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    k = 1
    while 2 ** _pairs(k + 1) <= n:
        k += 1
    total = k * n - sum((k - d) * 2 ** _pairs(d) for d in range(1, k))
    return -(-total // 2)


def link_distinctness_edge_floor(n: int) -> int:
    """``ceil((7n - 289) / 2)``: edge floor once links of order <= 6 run out."""
    if n <= LINK_TYPES_UP_TO_6:
        raise ValueError(f"formula needs n > {LINK_TYPES_UP_TO_6}")
    return -(-(7 * n - 289) // 2)


def planar_crossover() -> int:
    """Smallest n at which the link floor exceeds ``3n - 6``."""
    n = LINK_TYPES_UP_TO_6 + 1
    while link_distinctness_edge_floor(n) <= 3 * n - 6:
        n += 1
    return n


@dataclass(frozen=True)
class BoundsReport:
    n: int
    edge_lower: int
    edge_upper: int
    asym_lower: int
    planar_possible: bool
    notes: tuple[str, ...] = field(default=())

    @property
    def vacuous(self) -> bool:
        return self.n < 6


def edge_bounds(n: int) -> BoundsReport:
    """All edge bounds for a link-irregular graph of order n.

    Below n = 6 there are no link-irregular graphs, so the bounds are
    returned but flagged vacuous in ``notes``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    notes = []
    if n < 6:
        notes.append("vacuous: no link-irregular graph has fewer than 6 vertices")
    notes.append("planar_possible is a necessary condition only (n <= 277)")
    return BoundsReport(
        n=n,
        edge_lower=edge_lower(n),
        edge_upper=edge_upper(n),
        asym_lower=asymptotic_edge_lower(n),
        planar_possible=n <= PLANAR_THRESHOLD,
        notes=tuple(notes),
    )


@dataclass(frozen=True)
class MomentEstimate:
    n: int
    g: int
    expected_unique: float
    variance_ratio: float


def moment_estimates(n: int, g: int) -> MomentEstimate:
    """First and second moment heuristics for vertices with a unique link
    type when each of n links is drawn uniformly from g types."""
    if n < 1 or g < 1:
        raise ValueError("need n >= 1 and g >= 1")
    x = Fraction(n - 1, g)
    expected = n * math.exp(-x)
    ratio = math.expm1(x) / n
    return MomentEstimate(n, g, expected, ratio)
