"""The cross-check machinery itself: suites run clean, estimators behave."""
import numpy as np
import pytest

from ircbounds.errors import SchemaError
from ircbounds.joint import NamedJoint
from ircbounds.verify import (
    SUITES,
    check_constant_relay_invariance,
    check_gauss_c_swap_gap,
    check_gauss_swap_involution,
    check_relay_free_reduction,
    grid_max_sum,
    plugin_mi_estimate,
    run_suite,
)
from ircbounds.regions import RateInequality, RateRegion2D


class TestSuiteRunner:
    def test_suite_names(self):
        assert SUITES == ("mi", "regions", "det", "gauss")

    def test_unknown_suite(self):
        with pytest.raises(SchemaError):
            run_suite("everything")

    def test_gauss_suite_all_pass(self):
        results = run_suite("gauss")
        assert all(r.passed for r in results)
        assert all(r.line().startswith("[PASS]") for r in results)

    def test_structural_invariances_pass(self):
        assert check_constant_relay_invariance(n_instances=2).passed
        assert check_relay_free_reduction(n_instances=3).passed
        assert check_gauss_swap_involution(n_draws=5).passed
        assert check_gauss_c_swap_gap().passed


class TestPluginEstimator:
    def test_tracks_exact_value_on_known_joint(self):
        table = np.array([[[0.2, 0.1], [0.05, 0.15]], [[0.1, 0.2], [0.15, 0.05]]])
        joint = NamedJoint((("A", 2), ("B", 2), ("C", 2)), table)
        exact = joint.mutual_info(("A",), ("B",), ("C",))
        rng = np.random.default_rng(3)
        estimate, se = plugin_mi_estimate(joint, ("A",), ("B",), ("C",), 500_000, rng)
        assert se > 0
        assert abs(estimate - exact) <= 4 * se

    def test_zero_mi_for_independent_pair(self):
        table = np.outer([0.3, 0.7], [0.4, 0.6]).reshape(2, 2)
        joint = NamedJoint((("A", 2), ("B", 2)), table)
        rng = np.random.default_rng(4)
        estimate, se = plugin_mi_estimate(joint, ("A",), ("B",), (), 200_000, rng)
        # Plug-in MI is biased upward by roughly (|A|-1)(|B|-1)/(2n ln 2).
        assert abs(estimate) <= 4 * se + 1e-5


class TestGridOracle:
    def test_matches_known_pentagon(self):
        region = RateRegion2D(
            [RateInequality(1, 0, 1.0), RateInequality(0, 1, 1.0), RateInequality(1, 1, 1.5)]
        )
        value, pitch = grid_max_sum(region, points=500)
        assert value <= 1.5 + 1e-12
        assert value >= 1.5 - pitch - 1e-12

    def test_empty_region_scores_zero(self):
        region = RateRegion2D(
            [RateInequality(1, 0, -1.0), RateInequality(0, 1, 1.0)]
        )
        assert grid_max_sum(region) == (0.0, 0.0)
