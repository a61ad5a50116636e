"""Rate-region geometry: frozen polygon oracles and a grid cross-check."""
import numpy as np
import pytest

from ircbounds.errors import InvariantError, SchemaError
from ircbounds.regions import (
    Polygon2D,
    RateInequality,
    RateRegion2D,
    contains,
    frontier,
    hull_union,
    is_subset,
    max_weighted,
)


def region(*triples):
    return RateRegion2D([RateInequality(a, b, rhs) for a, b, rhs in triples])


def vertex_set(polygon, tol=1e-9):
    return {(round(x / tol) * tol, round(y / tol) * tol) for x, y in polygon.vertices}


UNIT_SQUARE = ((1, 0, 1.0), (0, 1, 1.0))
PENTAGON = ((1, 0, 1.0), (0, 1, 1.0), (1, 1, 1.5))


class TestFrontier:
    def test_unit_square(self):
        poly = frontier(region(*UNIT_SQUARE))
        assert vertex_set(poly) == {(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)}

    def test_pentagon(self):
        poly = frontier(region(*PENTAGON))
        assert vertex_set(poly) == {
            (0.0, 0.0),
            (1.0, 0.0),
            (1.0, 0.5),
            (0.5, 1.0),
            (0.0, 1.0),
        }

    def test_vertices_run_counterclockwise(self):
        poly = frontier(region(*PENTAGON))
        area2 = 0.0
        vs = poly.vertices
        for (x0, y0), (x1, y1) in zip(vs, vs[1:] + vs[:1]):
            area2 += x0 * y1 - x1 * y0
        assert area2 > 0

    def test_dominated_inequality_changes_nothing(self):
        base = frontier(region(*PENTAGON))
        padded = frontier(region(*PENTAGON, (1, 0, 5.0), (1, 1, 9.0)))
        assert vertex_set(base) == vertex_set(padded)

    def test_negative_rhs_empties_region(self):
        poly = frontier(region((1, 0, 1.0), (0, 1, -0.25)))
        assert poly.is_empty

    def test_unbounded_direction_is_an_error(self):
        with pytest.raises(InvariantError):
            frontier(region((1, 0, 1.0)))
        with pytest.raises(InvariantError):
            frontier(region((0, 1, 1.0)))

    def test_single_mixed_constraint_is_bounded(self):
        poly = frontier(region((1, 1, 1.0)))
        assert vertex_set(poly) == {(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)}


class TestMaxWeighted:
    def test_square_sum_rate(self):
        value, point = max_weighted(region(*UNIT_SQUARE), 1.0, 1.0)
        assert value == pytest.approx(2.0, abs=1e-12)
        assert point == pytest.approx((1.0, 1.0), abs=1e-12)

    def test_steep_constraint_moves_optimum(self):
        value, point = max_weighted(region((2, 1, 2.0), (1, 0, 1.0), (0, 1, 1.0)), 1.0, 1.0)
        assert value == pytest.approx(1.5, abs=1e-12)
        assert point == pytest.approx((0.5, 1.0), abs=1e-12)

    def test_empty_region_scores_zero(self):
        value, point = max_weighted(region((1, 0, -1.0), (0, 1, 1.0)), 1.0, 1.0)
        assert value == 0.0 and point == (0.0, 0.0)

    def test_weighting_picks_extreme_corner(self):
        value, point = max_weighted(region(*PENTAGON), 1.0, 0.0)
        assert value == pytest.approx(1.0, abs=1e-12)
        assert point[0] == pytest.approx(1.0, abs=1e-12)

    def test_agrees_with_grid_on_random_regions(self):
        rng = np.random.default_rng(8)
        for _ in range(25):
            r = region(
                (1, 0, float(rng.uniform(0.1, 2))),
                (0, 1, float(rng.uniform(0.1, 2))),
                (1, 1, float(rng.uniform(0.1, 3))),
                (2, 1, float(rng.uniform(0.1, 5))),
                (1, 2, float(rng.uniform(0.1, 5))),
            )
            exact, _ = max_weighted(r, 1.0, 1.0)
            effective = r.reduced()
            xm = min(rhs / a for (a, b), rhs in effective.items() if a > 0)
            ym = min(rhs / b for (a, b), rhs in effective.items() if b > 0)
            xs = np.linspace(0, xm, 400)[:, None]
            ys = np.linspace(0, ym, 400)[None, :]
            ok = np.ones((400, 400), dtype=bool)
            for (a, b), rhs in effective.items():
                ok &= a * xs + b * ys <= rhs + 1e-12
            gridded = float((xs + ys)[ok].max())
            pitch = (xm + ym) / 399
            assert gridded <= exact + 1e-9
            assert exact <= gridded + pitch + 1e-9


class TestSetPredicates:
    def test_contains_interior_and_boundary(self):
        r = region(*PENTAGON)
        assert contains(r, (0.7, 0.7))
        assert contains(r, (1.0, 0.5))
        assert not contains(r, (0.9, 0.9))
        assert not contains(r, (-0.1, 0.2))

    def test_subset_relations(self):
        small = region((1, 0, 0.5), (0, 1, 0.5))
        assert is_subset(small, region(*PENTAGON))
        assert not is_subset(region(*PENTAGON), small)

    def test_reduced_takes_tightest_per_pattern(self):
        r = region((1, 0, 1.0), (1, 0, 0.3), (0, 1, 2.0))
        assert r.reduced()[(1, 0)] == pytest.approx(0.3)


class TestHullUnion:
    def test_time_sharing_between_two_boxes(self):
        tall = frontier(region((1, 0, 0.2), (0, 1, 1.0)))
        wide = frontier(region((1, 0, 1.0), (0, 1, 0.2)))
        hull = hull_union([tall, wide])
        assert vertex_set(hull) == {
            (0.0, 0.0),
            (1.0, 0.0),
            (1.0, 0.2),
            (0.2, 1.0),
            (0.0, 1.0),
        }

    def test_union_with_empty_polygon(self):
        box = frontier(region(*UNIT_SQUARE))
        hull = hull_union([box, Polygon2D(())])
        assert vertex_set(hull) == vertex_set(box)


class TestValidation:
    def test_rejects_unknown_pattern(self):
        with pytest.raises(SchemaError):
            RateInequality(3, 1, 1.0)

    def test_rejects_nonfinite_rhs(self):
        with pytest.raises(SchemaError):
            RateInequality(1, 0, float("nan"))
