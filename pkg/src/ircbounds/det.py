"""Capacity region of the injective deterministic class with a shared relay.

The class fixes deterministic maps: interference descriptions t1(x1),
t2(x2), destination outputs y4(x1, t2) and y5(x2, t1) that are injective
in the interfering description for every own-symbol, and a relay
observation y3(x1, x2) that must be recoverable from (x1, y4') and from
(x2, y5').  The relay forwards over a noiseless broadcast link of
capacity R0 shared by both destinations.

For this class the seven rate bounds are exact and collapse to conditional
entropies: each bound takes the cheaper of shipping the relay observation
inside the channel (entropy term) or over the link (R0 term).

``specialization_check`` embeds a deterministic spec into the general
relay-channel evaluator (identity quantization, uniform relay input whose
alphabet carries exactly R0 bits) and confirms both routes agree.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dm import ImrcChannel, ImrcInputSpec, corollary1_region, BOUND_LABELS
from .errors import InvariantError, SchemaError
from .joint import ConditionalFactor, NamedJoint, build_joint, deterministic_factor
from .regions import RateInequality

SPECIALIZATION_TOL = 1e-9


def _as_map(values, name: str, ndim: int) -> np.ndarray:
    arr = np.asarray(values, dtype=np.int64)
    if arr.ndim != ndim:
        raise SchemaError(f"{name} must be a {ndim}-d integer map, got {arr.ndim}-d")
    if arr.size == 0:
        raise SchemaError(f"{name} must be non-empty")
    if arr.min() < 0:
        raise SchemaError(f"{name} contains negative symbol indices")
    return arr


@dataclass(frozen=True)
class InjectiveDetSpec:
    """Deterministic maps plus the relay-link rate.

    ``t1``: (x1,) -> T1 indices, ``t2``: (x2,) -> T2 indices,
    ``y4``: (x1, t2) -> Y4' indices, ``y5``: (x2, t1) -> Y5' indices,
    ``y3``: (x1, x2) -> Y3 indices.  Alphabet sizes are one plus the
    largest index used.  ``x3_size`` is the relay-input alphabet of the
    embedded general channel; ``r0`` >= 0 is the noiseless link rate.
    """

    t1: np.ndarray
    t2: np.ndarray
    y4: np.ndarray
    y5: np.ndarray
    y3: np.ndarray
    x3_size: int = 2
    r0: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "t1", _as_map(self.t1, "t1", 1))
        object.__setattr__(self, "t2", _as_map(self.t2, "t2", 1))
        object.__setattr__(self, "y4", _as_map(self.y4, "y4", 2))
        object.__setattr__(self, "y5", _as_map(self.y5, "y5", 2))
        object.__setattr__(self, "y3", _as_map(self.y3, "y3", 2))
        if self.x3_size < 1:
            raise SchemaError(f"x3_size must be >= 1, got {self.x3_size}")
        if not (self.r0 >= 0.0 and math.isfinite(self.r0)):
            raise SchemaError(f"r0 must be finite and >= 0, got {self.r0}")
        if self.y4.shape != (self.x1_size, self.t2_size):
            raise SchemaError(
                f"y4 must have shape (|X1|, |T2|) = {(self.x1_size, self.t2_size)}, "
                f"got {self.y4.shape}"
            )
        if self.y5.shape != (self.x2_size, self.t1_size):
            raise SchemaError(
                f"y5 must have shape (|X2|, |T1|) = {(self.x2_size, self.t1_size)}, "
                f"got {self.y5.shape}"
            )
        if self.y3.shape != (self.x1_size, self.x2_size):
            raise SchemaError(
                f"y3 must have shape (|X1|, |X2|) = {(self.x1_size, self.x2_size)}, "
                f"got {self.y3.shape}"
            )

    @property
    def x1_size(self) -> int:
        return self.t1.shape[0]

    @property
    def x2_size(self) -> int:
        return self.t2.shape[0]

    @property
    def t1_size(self) -> int:
        return int(self.t1.max()) + 1

    @property
    def t2_size(self) -> int:
        return int(self.t2.max()) + 1

    @property
    def y4_size(self) -> int:
        return int(self.y4.max()) + 1

    @property
    def y5_size(self) -> int:
        return int(self.y5.max()) + 1

    @property
    def y3_size(self) -> int:
        return int(self.y3.max()) + 1


@dataclass(frozen=True)
class DetInput:
    """Product input p(q) * p(x1|q) * p(x2|q) as explicit tables."""

    p_q: np.ndarray
    p_x1: np.ndarray
    p_x2: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "p_q", np.asarray(self.p_q, dtype=np.float64))
        object.__setattr__(self, "p_x1", np.asarray(self.p_x1, dtype=np.float64))
        object.__setattr__(self, "p_x2", np.asarray(self.p_x2, dtype=np.float64))
        if self.p_q.ndim != 1:
            raise SchemaError("p_q must be a vector")
        q = self.p_q.shape[0]
        for name, tab in (("p_x1", self.p_x1), ("p_x2", self.p_x2)):
            if tab.ndim != 2 or tab.shape[0] != q:
                raise SchemaError(f"{name} must have shape (q, x) with q = {q}")

    @property
    def q_size(self) -> int:
        return self.p_q.shape[0]


@dataclass(frozen=True)
class DetValidationReport:
    """Outcome of checking a spec against the class's structural rules."""

    y4_collisions: tuple[tuple[int, int, int], ...] = ()
    y5_collisions: tuple[tuple[int, int, int], ...] = ()
    y3_conflicts_via_y4: tuple[tuple[int, int, int], ...] = ()
    y3_conflicts_via_y5: tuple[tuple[int, int, int], ...] = ()

    @property
    def ok(self) -> bool:
        return not (
            self.y4_collisions or self.y5_collisions or self.y3_conflicts_via_y4 or self.y3_conflicts_via_y5
        )

    def violations(self) -> list[str]:
        lines = []
        for x1, ta, tb in self.y4_collisions:
            lines.append(
                f"y4 not injective in t2 at x1={x1}: t2={ta} and t2={tb} give the same output"
            )
        for x2, ta, tb in self.y5_collisions:
            lines.append(
                f"y5 not injective in t1 at x2={x2}: t1={ta} and t1={tb} give the same output"
            )
        for x1, xa, xb in self.y3_conflicts_via_y4:
            lines.append(
                f"y3 not recoverable from (x1, y4'): x1={x1}, x2={xa} vs x2={xb} share t2 "
                "but give different y3"
            )
        for x2, xa, xb in self.y3_conflicts_via_y5:
            lines.append(
                f"y3 not recoverable from (x2, y5'): x2={x2}, x1={xa} vs x1={xb} share t1 "
                "but give different y3"
            )
        return lines


def validate(spec: InjectiveDetSpec) -> DetValidationReport:
    """Check injectivity and relay-recoverability of the deterministic maps."""
    inj4 = []
    for x1 in range(spec.x1_size):
        for ta in range(spec.t2_size):
            for tb in range(ta + 1, spec.t2_size):
                if spec.y4[x1, ta] == spec.y4[x1, tb]:
                    inj4.append((x1, ta, tb))
    inj5 = []
    for x2 in range(spec.x2_size):
        for ta in range(spec.t1_size):
            for tb in range(ta + 1, spec.t1_size):
                if spec.y5[x2, ta] == spec.y5[x2, tb]:
                    inj5.append((x2, ta, tb))
    rec1 = []
    for x1 in range(spec.x1_size):
        for xa in range(spec.x2_size):
            for xb in range(xa + 1, spec.x2_size):
                if spec.t2[xa] == spec.t2[xb] and spec.y3[x1, xa] != spec.y3[x1, xb]:
                    rec1.append((x1, xa, xb))
    rec2 = []
    for x2 in range(spec.x2_size):
        for xa in range(spec.x1_size):
            for xb in range(xa + 1, spec.x1_size):
                if spec.t1[xa] == spec.t1[xb] and spec.y3[xa, x2] != spec.y3[xb, x2]:
                    rec2.append((x2, xa, xb))
    return DetValidationReport(tuple(inj4), tuple(inj5), tuple(rec1), tuple(rec2))


def det_joint(spec: InjectiveDetSpec, inputs: DetInput) -> NamedJoint:
    """Joint over (Q, X1, X2, T1, T2, Y4p, Y5p, Y3) induced by the maps."""
    factors = [
        ConditionalFactor(("Q",), (), inputs.p_q),
        ConditionalFactor(("X1",), ("Q",), inputs.p_x1),
        ConditionalFactor(("X2",), ("Q",), inputs.p_x2),
        deterministic_factor(
            [("T1", spec.t1_size)], [("X1", spec.x1_size)], lambda x1: int(spec.t1[x1])
        ),
        deterministic_factor(
            [("T2", spec.t2_size)], [("X2", spec.x2_size)], lambda x2: int(spec.t2[x2])
        ),
        deterministic_factor(
            [("Y4p", spec.y4_size)],
            [("X1", spec.x1_size), ("T2", spec.t2_size)],
            lambda x1, t2: int(spec.y4[x1, t2]),
        ),
        deterministic_factor(
            [("Y5p", spec.y5_size)],
            [("X2", spec.x2_size), ("T1", spec.t1_size)],
            lambda x2, t1: int(spec.y5[x2, t1]),
        ),
        deterministic_factor(
            [("Y3", spec.y3_size)],
            [("X1", spec.x1_size), ("X2", spec.x2_size)],
            lambda x1, x2: int(spec.y3[x1, x2]),
        ),
    ]
    return build_joint(factors)


def theorem2_region(spec: InjectiveDetSpec, inputs: DetInput) -> list[RateInequality]:
    """Seven exact bounds for a valid deterministic spec.

    Each decoding term takes the cheaper of two routes for the missing
    relay observation: its residual entropy inside the channel, or the
    noiseless link rate R0.
    """
    report = validate(spec)
    if not report.ok:
        raise InvariantError(
            "deterministic spec violates the class rules: " + "; ".join(report.violations())
        )
    joint = det_joint(spec, inputs)
    h = joint.cond_entropy
    r0 = spec.r0

    r1 = h(("Y4p",), ("T2", "Q")) + min(h(("Y3",), ("Y4p", "T2", "Q")), r0)
    r2 = h(("Y5p",), ("T1", "Q")) + min(h(("Y3",), ("Y5p", "T1", "Q")), r0)
    sum_a = min(
        h(("Y3", "Y4p"), ("T1", "T2", "Q")), h(("Y4p",), ("T1", "T2", "Q")) + r0
    ) + min(h(("Y3", "Y5p"), ("Q",)), h(("Y5p",), ("Q",)) + r0)
    sum_b = min(
        h(("Y3", "Y5p"), ("T1", "T2", "Q")), h(("Y5p",), ("T1", "T2", "Q")) + r0
    ) + min(h(("Y3", "Y4p"), ("Q",)), h(("Y4p",), ("Q",)) + r0)
    sum_c = min(h(("Y3", "Y4p"), ("T1", "Q")), h(("Y4p",), ("T1", "Q")) + r0) + min(
        h(("Y3", "Y5p"), ("T2", "Q")), h(("Y5p",), ("T2", "Q")) + r0
    )
    two_r1 = (
        min(h(("Y3", "Y4p"), ("T1", "T2", "Q")), h(("Y4p",), ("T1", "T2", "Q")) + r0)
        + min(h(("Y3", "Y4p"), ("Q",)), h(("Y4p",), ("Q",)) + r0)
        + min(h(("Y3", "Y5p"), ("T2", "Q")), h(("Y5p",), ("T2", "Q")) + r0)
    )
    two_r2 = (
        min(h(("Y3", "Y5p"), ("T1", "T2", "Q")), h(("Y5p",), ("T1", "T2", "Q")) + r0)
        + min(h(("Y3", "Y5p"), ("Q",)), h(("Y5p",), ("Q",)) + r0)
        + min(h(("Y3", "Y4p"), ("T1", "Q")), h(("Y4p",), ("T1", "Q")) + r0)
    )

    values = (r1, r2, sum_a, sum_b, sum_c, two_r1, two_r2)
    coeffs = ((1, 0), (0, 1), (1, 1), (1, 1), (1, 1), (2, 1), (1, 2))
    return [
        RateInequality(a, b, rhs, label)
        for (a, b), rhs, label in zip(coeffs, values, BOUND_LABELS)
    ]


def as_relay_channel(
    spec: InjectiveDetSpec, inputs: DetInput
) -> tuple[ImrcChannel, ImrcInputSpec]:
    """Embed a deterministic spec into the general single-relay evaluator.

    The embedding: destination outputs are (y4', x3) and (y5', x3) pairs
    (the relay input reaches both destinations cleanly), the common
    descriptions T1/T2 become the auxiliaries U1/U2, the quantization is
    the identity on Y3, and the relay input is uniform so the forwarded
    alphabet carries exactly log2(x3_size) = R0 bits.
    """
    x1s, x2s, x3s = spec.x1_size, spec.x2_size, spec.x3_size
    y3s, y4s, y5s = spec.y3_size, spec.y4_size, spec.y5_size
    q = inputs.q_size

    law = np.zeros((x1s, x2s, x3s, y3s, y4s * x3s, y5s * x3s), dtype=np.float64)
    for x1 in range(x1s):
        for x2 in range(x2s):
            y3 = int(spec.y3[x1, x2])
            y4p = int(spec.y4[x1, spec.t2[x2]])
            y5p = int(spec.y5[x2, spec.t1[x1]])
            for x3 in range(x3s):
                law[x1, x2, x3, y3, y4p * x3s + x3, y5p * x3s + x3] = 1.0
    channel = ImrcChannel(
        relays=1,
        x1_size=x1s,
        x2_size=x2s,
        x3_sizes=(x3s,),
        y3_sizes=(y3s,),
        y4_size=y4s * x3s,
        y5_size=y5s * x3s,
        law=ConditionalFactor(("Y3_1", "Y4", "Y5"), ("X1", "X2", "X3_1"), law),
    )

    p_u1x1 = np.zeros((q, spec.t1_size, x1s), dtype=np.float64)
    for qi in range(q):
        for x1 in range(x1s):
            p_u1x1[qi, spec.t1[x1], x1] = inputs.p_x1[qi, x1]
    p_u2x2 = np.zeros((q, spec.t2_size, x2s), dtype=np.float64)
    for qi in range(q):
        for x2 in range(x2s):
            p_u2x2[qi, spec.t2[x2], x2] = inputs.p_x2[qi, x2]
    p_x3 = np.full((q, x3s), 1.0 / x3s, dtype=np.float64)
    p_yh3 = np.zeros((y3s, x3s, q, y3s), dtype=np.float64)
    for y3 in range(y3s):
        p_yh3[y3, :, :, y3] = 1.0
    spec_inputs = ImrcInputSpec(
        p_q=inputs.p_q, p_u1x1=p_u1x1, p_u2x2=p_u2x2, p_x3=(p_x3,), p_yh3=(p_yh3,)
    )
    return channel, spec_inputs


def specialization_check(spec: InjectiveDetSpec, inputs: DetInput) -> float:
    """Max |difference| between the class bounds and the embedded evaluator.

    Requires r0 == log2(x3_size): the embedding realizes the link as a
    uniform relay-input alphabet, which carries exactly that many bits.
    """
    want_r0 = math.log2(spec.x3_size)
    if abs(spec.r0 - want_r0) > 1e-12:
        raise InvariantError(
            f"specialization needs r0 = log2(x3_size) = {want_r0}, spec has {spec.r0}"
        )
    direct = theorem2_region(spec, inputs)
    channel, relay_inputs = as_relay_channel(spec, inputs)
    embedded = corollary1_region(channel, relay_inputs)
    worst = 0.0
    for d, e in zip(direct, embedded):
        if (d.a, d.b, d.label) != (e.a, e.b, e.label):
            raise InvariantError("bound families of the two routes fell out of order")
        worst = max(worst, abs(d.rhs - e.rhs))
    return worst
