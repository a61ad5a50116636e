"""Two-dimensional rate-region polyhedra.

A region is the set of rate pairs (R1, R2) with R1 >= 0, R2 >= 0 satisfying
a list of inequalities a*R1 + b*R2 <= rhs whose coefficient patterns come
from the fixed family {(1,0), (0,1), (1,1), (2,1), (1,2)}.  Because every
coefficient is nonnegative, the region is nonempty exactly when the origin
is feasible, i.e. when every rhs is >= 0, and it is a bounded convex
polygon whenever some constraint has a > 0 and some constraint has b > 0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvariantError, SchemaError

GEOM_TOL = 1e-9

# Coefficient patterns a rate inequality may carry.
COEFF_PATTERNS = ((1, 0), (0, 1), (1, 1), (2, 1), (1, 2))


@dataclass(frozen=True)
class RateInequality:
    """One linear rate bound  a*R1 + b*R2 <= rhs  (rhs in bits)."""

    a: int
    b: int
    rhs: float
    label: str = ""

    def __post_init__(self) -> None:
        if (self.a, self.b) not in COEFF_PATTERNS:
            raise SchemaError(
                f"coefficient pattern ({self.a}, {self.b}) not in {COEFF_PATTERNS}"
            )
        if not math.isfinite(self.rhs):
            raise SchemaError(f"bound value must be finite, got {self.rhs}")


@dataclass(frozen=True)
class RateRegion2D:
    """Intersection of rate inequalities with the nonnegative quadrant."""

    inequalities: tuple[RateInequality, ...]

    def __init__(self, inequalities: Iterable[RateInequality]):
        object.__setattr__(self, "inequalities", tuple(inequalities))
        if not self.inequalities:
            raise SchemaError("a rate region needs at least one inequality")

    def reduced(self) -> dict[tuple[int, int], float]:
        """Tightest rhs per coefficient pattern."""
        best: dict[tuple[int, int], float] = {}
        for ineq in self.inequalities:
            key = (ineq.a, ineq.b)
            if key not in best or ineq.rhs < best[key]:
                best[key] = ineq.rhs
        return best


@dataclass(frozen=True)
class Polygon2D:
    """Convex polygon as a CCW-ordered vertex tuple; empty tuple = empty set."""

    vertices: tuple[tuple[float, float], ...]

    @property
    def is_empty(self) -> bool:
        return not self.vertices


def _dedupe(points: list[tuple[float, float]]) -> list[tuple[float, float]]:
    kept: list[tuple[float, float]] = []
    for p in points:
        p = (p[0] + 0.0, p[1] + 0.0)  # normalize -0.0
        if all(abs(p[0] - q[0]) > GEOM_TOL or abs(p[1] - q[1]) > GEOM_TOL for q in kept):
            kept.append(p)
    return kept


def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull_ccw(points: list[tuple[float, float]]) -> tuple[tuple[float, float], ...]:
    """Monotone-chain convex hull, CCW from the lexicographically smallest vertex."""
    pts = sorted(_dedupe(points))
    if len(pts) <= 2:
        return tuple(pts)
    lower: list[tuple[float, float]] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= GEOM_TOL * GEOM_TOL:
            lower.pop()
        lower.append(p)
    upper: list[tuple[float, float]] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= GEOM_TOL * GEOM_TOL:
            upper.pop()
        upper.append(p)
    return tuple(lower[:-1] + upper[:-1])


def frontier(region: RateRegion2D) -> Polygon2D:
    """Vertex description of the region.

    Vertices are pairwise intersections of binding constraint lines (the
    axes included), filtered for feasibility within ``GEOM_TOL``, deduped,
    and ordered counterclockwise.  Returns the empty polygon when some rhs
    is negative (the origin itself is then infeasible).
    """
    effective = region.reduced()
    if any(rhs < 0.0 for rhs in effective.values()):
        return Polygon2D(())
    if not any(a > 0 for a, _ in effective):
        raise InvariantError("region is unbounded in R1: no constraint with a > 0")
    if not any(b > 0 for _, b in effective):
        raise InvariantError("region is unbounded in R2: no constraint with b > 0")

    # Lines as a*x + b*y = c; the two axes are x = 0 and y = 0.
    lines = [(1.0, 0.0, 0.0), (0.0, 1.0, 0.0)]
    lines += [(float(a), float(b), rhs) for (a, b), rhs in sorted(effective.items())]

    candidates: list[tuple[float, float]] = []
    for i in range(len(lines)):
        a1, b1, c1 = lines[i]
        for j in range(i + 1, len(lines)):
            a2, b2, c2 = lines[j]
            det = a1 * b2 - a2 * b1
            if abs(det) < 1e-15:
                continue
            x = (c1 * b2 - c2 * b1) / det
            y = (a1 * c2 - a2 * c1) / det
            candidates.append((x, y))

    feasible: list[tuple[float, float]] = []
    for x, y in candidates:
        if x < -GEOM_TOL or y < -GEOM_TOL:
            continue
        if all(a * x + b * y <= rhs + GEOM_TOL for (a, b), rhs in effective.items()):
            feasible.append((max(x, 0.0), max(y, 0.0)))
    return Polygon2D(_hull_ccw(feasible))


def max_weighted(region: RateRegion2D, w1: float, w2: float) -> tuple[float, tuple[float, float]]:
    """Maximize w1*R1 + w2*R2 over the region.

    The maximum of a linear functional over a bounded polygon is attained
    at a vertex.  An empty region reports (0.0, (0.0, 0.0)).
    """
    poly = frontier(region)
    if poly.is_empty:
        return 0.0, (0.0, 0.0)
    best_value = None
    best_vertex = poly.vertices[0]
    for vertex in poly.vertices:
        value = w1 * vertex[0] + w2 * vertex[1]
        if best_value is None or value > best_value:
            best_value = value
            best_vertex = vertex
    return float(best_value), best_vertex


def contains(region: RateRegion2D, point: tuple[float, float]) -> bool:
    """Membership within ``GEOM_TOL``."""
    x, y = point
    if x < -GEOM_TOL or y < -GEOM_TOL:
        return False
    return all(
        ineq.a * x + ineq.b * y <= ineq.rhs + GEOM_TOL for ineq in region.inequalities
    )


def is_subset(inner: RateRegion2D, outer: RateRegion2D) -> bool:
    """True when every vertex of ``inner`` lies in ``outer`` (both convex)."""
    poly = frontier(inner)
    return all(contains(outer, vertex) for vertex in poly.vertices)


def hull_union(polygons: Sequence[Polygon2D]) -> Polygon2D:
    """Convex hull of a union of polygons (the time-sharing closure)."""
    if not polygons:
        raise SchemaError("hull_union needs at least one polygon")
    pooled: list[tuple[float, float]] = []
    for poly in polygons:
        pooled.extend(poly.vertices)
    if not pooled:
        return Polygon2D(())
    return Polygon2D(_hull_ccw(pooled))
