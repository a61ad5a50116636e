"""Probability engine: values frozen from hand computation."""
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ircbounds.errors import InvariantError, SchemaError
from ircbounds.joint import (
    ConditionalFactor,
    NamedJoint,
    build_joint,
    deterministic_factor,
)


def bsc_joint(flip: float = 0.1, p1: float = 0.7) -> NamedJoint:
    """Binary symmetric flip channel driven by a biased coin."""
    table = np.array(
        [
            [(1 - p1) * (1 - flip), (1 - p1) * flip],
            [p1 * flip, p1 * (1 - flip)],
        ]
    )
    return NamedJoint((("X", 2), ("Y", 2)), table)


class TestNamedJointBasics:
    def test_bsc_joint_entries(self):
        j = bsc_joint()
        assert j.table[0, 1] == pytest.approx(0.03, abs=1e-15)
        assert j.table[1, 1] == pytest.approx(0.63, abs=1e-15)

    def test_bsc_output_marginal(self):
        j = bsc_joint()
        m = j.marginalize(("Y",))
        assert m.table[1] == pytest.approx(0.66, abs=1e-12)
        assert m.table.sum() == pytest.approx(1.0, abs=1e-12)

    def test_marginal_keeps_canonical_order(self):
        j = bsc_joint()
        assert j.marginalize(("Y", "X")).names == ("X", "Y")

    def test_entropy_biased_coin(self):
        # -0.25 log2 0.25 - 0.75 log2 0.75, worked out by hand.
        j = NamedJoint((("Z", 2),), np.array([0.25, 0.75]))
        assert j.entropy(("Z",)) == pytest.approx(0.8112781244591328, abs=1e-14)

    def test_entropy_uniform_is_log_size(self):
        j = NamedJoint((("Z", 8),), np.full(8, 0.125))
        assert j.entropy(("Z",)) == pytest.approx(3.0, abs=1e-14)

    def test_entropy_point_mass_is_zero(self):
        j = NamedJoint((("Z", 4),), np.array([0.0, 1.0, 0.0, 0.0]))
        assert j.entropy(("Z",)) == 0.0

    def test_mutual_info_symmetric_channel(self):
        # 1 - h(0.2) for the symmetric 2x2 joint with 0.4 on the diagonal.
        j = NamedJoint((("A", 2), ("B", 2)), np.array([[0.4, 0.1], [0.1, 0.4]]))
        want = 1.0 - (-(0.2 * math.log2(0.2) + 0.8 * math.log2(0.8)))
        assert j.mutual_info(("A",), ("B",)) == pytest.approx(want, abs=1e-12)

    def test_mutual_info_independent_is_zero(self):
        j = NamedJoint(
            (("A", 2), ("B", 3)),
            np.outer([0.3, 0.7], [0.2, 0.5, 0.3]),
        )
        assert j.mutual_info(("A",), ("B",)) == pytest.approx(0.0, abs=1e-12)

    def test_conditional_entropy_of_bsc(self):
        # H(Y|X) of a flip-0.1 channel is h(0.1) no matter the input law.
        j = bsc_joint()
        want = -(0.1 * math.log2(0.1) + 0.9 * math.log2(0.9))
        assert j.cond_entropy(("Y",), ("X",)) == pytest.approx(want, abs=1e-12)


class TestNamedJointValidation:
    def test_rejects_bad_sum(self):
        with pytest.raises(InvariantError):
            NamedJoint((("Z", 2),), np.array([0.5, 0.6]))

    def test_rejects_negative_entry(self):
        with pytest.raises(InvariantError):
            NamedJoint((("Z", 2),), np.array([1.1, -0.1]))

    def test_clamps_tiny_negative(self):
        j = NamedJoint((("Z", 2),), np.array([1.0 + 1e-13, -1e-13]))
        assert j.table[1] == 0.0

    def test_rejects_duplicate_names(self):
        with pytest.raises(SchemaError):
            NamedJoint((("Z", 2), ("Z", 2)), np.full((2, 2), 0.25))

    def test_rejects_shape_mismatch(self):
        with pytest.raises(SchemaError):
            NamedJoint((("Z", 3),), np.array([0.5, 0.5]))

    def test_rejects_unknown_marginal(self):
        with pytest.raises(SchemaError):
            bsc_joint().marginalize(("W",))

    def test_rejects_overlapping_mi_groups(self):
        with pytest.raises(SchemaError):
            bsc_joint().mutual_info(("X",), ("X",))

    def test_renormalizes_once(self):
        eps = 4e-13
        j = NamedJoint((("Z", 2),), np.array([0.5, 0.5 + eps]))
        assert j.table.sum() == pytest.approx(1.0, abs=1e-15)


class TestConditionalFactor:
    def test_rows_must_normalize(self):
        with pytest.raises(InvariantError):
            ConditionalFactor(("Y",), ("X",), np.array([[0.7, 0.2], [0.5, 0.5]]))

    def test_deterministic_factor_builds_point_masses(self):
        f = deterministic_factor([("Y", 2)], [("X", 2)], lambda x: x ^ 1)
        assert f.table[0, 1] == 1.0 and f.table[1, 0] == 1.0
        assert f.table.sum() == 2.0


class TestBuildJoint:
    def test_chain_reproduces_bsc(self):
        px = ConditionalFactor(("X",), (), np.array([0.3, 0.7]))
        flip = ConditionalFactor(("Y",), ("X",), np.array([[0.9, 0.1], [0.1, 0.9]]))
        j = build_joint([px, flip])
        assert j.names == ("X", "Y")
        np.testing.assert_allclose(j.table, bsc_joint().table, atol=1e-15)

    def test_rejects_dangling_condition(self):
        flip = ConditionalFactor(("Y",), ("X",), np.array([[0.9, 0.1], [0.1, 0.9]]))
        with pytest.raises(SchemaError):
            build_joint([flip])

    def test_rejects_double_production(self):
        px = ConditionalFactor(("X",), (), np.array([0.3, 0.7]))
        with pytest.raises(SchemaError):
            build_joint([px, px])

    def test_rejects_size_conflict(self):
        px = ConditionalFactor(("X",), (), np.array([0.3, 0.7]))
        f3 = ConditionalFactor(("Y",), ("X",), np.full((3, 2), 0.5))
        with pytest.raises(SchemaError):
            build_joint([px, f3])

    def test_entry_cap_enforced_before_allocation(self):
        coin = np.array([0.5, 0.5])
        factors = [
            ConditionalFactor((f"B{i}",), (), coin) for i in range(27)  # 2**27 > 1e8
        ]
        with pytest.raises(InvariantError):
            build_joint(factors)


@st.composite
def small_joints(draw):
    sa = draw(st.integers(2, 3))
    sb = draw(st.integers(2, 3))
    sc = draw(st.integers(2, 3))
    raw = draw(
        st.lists(
            st.floats(0.01, 1.0, allow_nan=False),
            min_size=sa * sb * sc,
            max_size=sa * sb * sc,
        )
    )
    table = np.array(raw).reshape(sa, sb, sc)
    table /= table.sum()
    return NamedJoint((("A", sa), ("B", sb), ("C", sc)), table)


class TestInformationIdentities:
    @settings(max_examples=60, deadline=None)
    @given(small_joints())
    def test_chain_rule(self, j):
        lhs = j.cond_entropy(("A", "B"), ("C",))
        rhs = j.cond_entropy(("A",), ("C",)) + j.cond_entropy(("B",), ("A", "C"))
        assert lhs == pytest.approx(rhs, abs=1e-10)

    @settings(max_examples=60, deadline=None)
    @given(small_joints())
    def test_mi_symmetry_is_bit_identical(self, j):
        assert j.mutual_info(("A",), ("B",), ("C",)) == j.mutual_info(
            ("B",), ("A",), ("C",)
        )

    @settings(max_examples=60, deadline=None)
    @given(small_joints())
    def test_nonnegativity(self, j):
        assert j.mutual_info(("A",), ("B",)) >= 0.0
        assert j.mutual_info(("A",), ("C",), ("B",)) >= 0.0
        assert j.cond_entropy(("A",), ("B", "C")) >= 0.0

    @settings(max_examples=30, deadline=None)
    @given(small_joints())
    def test_conditioning_reduces_entropy(self, j):
        assert j.cond_entropy(("A",), ("B",)) <= j.entropy(("A",)) + 1e-12
