"""Achievable rate region for the two-pair discrete interference channel
assisted by N compress-and-forward relays.

The channel has sources X1, X2, relay inputs X3_1..X3_N, relay observations
Y3_1..Y3_N and destination outputs Y4 (for pair 1) and Y5 (for pair 2).
The coding scheme splits each message into a common part (carried by U1,
U2) and a private part, lets every relay quantize its observation Y3_k
into Yh3_k, and lets each destination jointly decode across all relay
subsets.  Q is an explicit time-sharing variable; it participates in the
conditioning of every information term.

Two evaluation routes are provided:

* ``theorem1_region``: the general N-relay evaluator built on
  ``hybrid_term``, which minimizes a decoding/compression tradeoff over
  all 2**N relay subsets.
* ``corollary1_region``: an independent straight-line transcription of the
  single-relay (N = 1) bound set, kept free of the subset machinery so the
  two routes can be cross-checked against each other.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InvariantError, SchemaError
from .joint import ConditionalFactor, NamedJoint, build_joint
from .regions import RateInequality

MAX_RELAYS = 20

BOUND_LABELS = ("R1", "R2", "R1+R2 (a)", "R1+R2 (b)", "R1+R2 (c)", "2R1+R2", "R1+2R2")


def x3_name(k: int) -> str:
    return f"X3_{k}"


def y3_name(k: int) -> str:
    return f"Y3_{k}"


def yh3_name(k: int) -> str:
    return f"Yh3_{k}"


@dataclass(frozen=True)
class ImrcChannel:
    """Memoryless channel law p(y3_1..y3_N, y4, y5 | x1, x2, x3_1..x3_N).

    ``law`` must produce exactly (Y3_1..Y3_N, Y4, Y5) given
    (X1, X2, X3_1..X3_N), with alphabet sizes matching the declared ones.
    """

    relays: int
    x1_size: int
    x2_size: int
    x3_sizes: tuple[int, ...]
    y3_sizes: tuple[int, ...]
    y4_size: int
    y5_size: int
    law: ConditionalFactor

    def __post_init__(self) -> None:
        n = self.relays
        if not 1 <= n <= MAX_RELAYS:
            raise SchemaError(f"relay count {n} outside 1..{MAX_RELAYS}")
        if len(self.x3_sizes) != n or len(self.y3_sizes) != n:
            raise SchemaError("x3_sizes / y3_sizes length must equal the relay count")
        want_given = ("X1", "X2") + tuple(x3_name(k) for k in range(1, n + 1))
        want_outputs = tuple(y3_name(k) for k in range(1, n + 1)) + ("Y4", "Y5")
        if self.law.given != want_given:
            raise SchemaError(f"law must condition on {want_given}, got {self.law.given}")
        if self.law.outputs != want_outputs:
            raise SchemaError(f"law must produce {want_outputs}, got {self.law.outputs}")
        want_shape = (
            (self.x1_size, self.x2_size)
            + tuple(self.x3_sizes)
            + tuple(self.y3_sizes)
            + (self.y4_size, self.y5_size)
        )
        if self.law.table.shape != want_shape:
            raise SchemaError(
                f"law table shape {self.law.table.shape} does not match alphabets {want_shape}"
            )


@dataclass(frozen=True)
class ImrcInputSpec:
    """Input distribution in the scheme's factored form.

    p(q) * p(u1, x1 | q) * p(u2, x2 | q) * prod_k p(x3_k | q)
         * prod_k p(yh3_k | y3_k, x3_k, q)

    Axis conventions: ``p_q`` is (q,); ``p_u1x1`` and ``p_u2x2`` are
    (q, u, x); ``p_x3[k]`` is (q, x3); ``p_yh3[k]`` is (y3, x3, q, yh3).
    No factor may condition on anything outside these scopes; the fixed
    field layout enforces that structurally.
    """

    p_q: np.ndarray
    p_u1x1: np.ndarray
    p_u2x2: np.ndarray
    p_x3: tuple[np.ndarray, ...]
    p_yh3: tuple[np.ndarray, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "p_q", np.asarray(self.p_q, dtype=np.float64))
        object.__setattr__(self, "p_u1x1", np.asarray(self.p_u1x1, dtype=np.float64))
        object.__setattr__(self, "p_u2x2", np.asarray(self.p_u2x2, dtype=np.float64))
        object.__setattr__(self, "p_x3", tuple(np.asarray(t, dtype=np.float64) for t in self.p_x3))
        object.__setattr__(self, "p_yh3", tuple(np.asarray(t, dtype=np.float64) for t in self.p_yh3))
        if self.p_q.ndim != 1:
            raise SchemaError("p_q must be a vector over the time-sharing alphabet")
        if len(self.p_x3) != len(self.p_yh3):
            raise SchemaError("need one p_x3 and one p_yh3 table per relay")
        q = self.q_size
        for name, tab, ndim in (("p_u1x1", self.p_u1x1, 3), ("p_u2x2", self.p_u2x2, 3)):
            if tab.ndim != ndim or tab.shape[0] != q:
                raise SchemaError(f"{name} must have shape (q, u, x) with q = {q}")
        for k, tab in enumerate(self.p_x3, start=1):
            if tab.ndim != 2 or tab.shape[0] != q:
                raise SchemaError(f"p_x3[{k}] must have shape (q, x3) with q = {q}")
        for k, (x3t, yht) in enumerate(zip(self.p_x3, self.p_yh3), start=1):
            if yht.ndim != 4 or yht.shape[1] != x3t.shape[1] or yht.shape[2] != q:
                raise SchemaError(f"p_yh3[{k}] must have shape (y3, x3, q, yh3)")

    @property
    def q_size(self) -> int:
        return self.p_q.shape[0]

    @property
    def relays(self) -> int:
        return len(self.p_x3)


def full_joint(channel: ImrcChannel, inputs: ImrcInputSpec) -> NamedJoint:
    """Dense joint over (Q, U1, X1, U2, X2, X3_*, Y3_*, Y4, Y5, Yh3_*)."""
    n = channel.relays
    if inputs.relays != n:
        raise SchemaError(f"input spec covers {inputs.relays} relays, channel has {n}")
    if inputs.p_u1x1.shape[2] != channel.x1_size or inputs.p_u2x2.shape[2] != channel.x2_size:
        raise SchemaError("input spec and channel disagree on source alphabet sizes")
    for k in range(n):
        if inputs.p_x3[k].shape[1] != channel.x3_sizes[k]:
            raise SchemaError(f"input spec and channel disagree on |X3_{k + 1}|")
        if inputs.p_yh3[k].shape[0] != channel.y3_sizes[k]:
            raise SchemaError(f"input spec and channel disagree on |Y3_{k + 1}|")

    q = inputs.q_size
    factors = [ConditionalFactor(("Q",), (), inputs.p_q)]
    factors.append(ConditionalFactor(("U1", "X1"), ("Q",), inputs.p_u1x1))
    factors.append(ConditionalFactor(("U2", "X2"), ("Q",), inputs.p_u2x2))
    for k in range(1, n + 1):
        factors.append(ConditionalFactor((x3_name(k),), ("Q",), inputs.p_x3[k - 1]))
    factors.append(channel.law)
    for k in range(1, n + 1):
        factors.append(
            ConditionalFactor(
                (yh3_name(k),), (y3_name(k), x3_name(k), "Q"), inputs.p_yh3[k - 1]
            )
        )
    del q
    return build_joint(factors)


def hybrid_term(
    joint: NamedJoint,
    message_vars: Iterable[str],
    dest: int,
    extra_cond: Iterable[str],
    relays: int,
) -> float:
    """Decoding rate of ``message_vars`` at destination ``dest`` (4 or 5).

    For every relay subset S the destination may decode the subset's relay
    inputs X3(S) alongside the messages while treating the complementary
    quantizations Yh3(S^c) as side outputs, paying the compression penalty
    of the subset's quantizers:

        I(W, X3(S) ; Yh3(S^c), Ydest | V, X3(S^c))
          - I(Yh3(S) ; Y3(S) | X_own, U_other, X3_all, Yh3(S^c), Ydest)

    and the achievable value is the minimum over all 2**N subsets.  S = {}
    has no penalty term.  The time-sharing variable Q, when present in the
    joint, is added to the conditioning of both informations.
    """
    if not 1 <= relays <= MAX_RELAYS:
        raise InvariantError(f"relay count {relays} outside 1..{MAX_RELAYS}")
    if dest not in (4, 5):
        raise SchemaError(f"destination must be 4 or 5, got {dest}")
    w = tuple(message_vars)
    v = tuple(extra_cond)
    ydest = "Y4" if dest == 4 else "Y5"
    fixed = ("X1", "U2") if dest == 4 else ("X2", "U1")
    all_x3 = tuple(x3_name(k) for k in range(1, relays + 1))
    q_cond = ("Q",) if "Q" in joint.names else ()

    best = None
    for mask in range(1 << relays):
        in_s = [k for k in range(1, relays + 1) if mask & (1 << (k - 1))]
        out_s = [k for k in range(1, relays + 1) if not mask & (1 << (k - 1))]
        x3_s = tuple(x3_name(k) for k in in_s)
        x3_sc = tuple(x3_name(k) for k in out_s)
        yh_s = tuple(yh3_name(k) for k in in_s)
        yh_sc = tuple(yh3_name(k) for k in out_s)
        y3_s = tuple(y3_name(k) for k in in_s)

        value = joint.mutual_info(w + x3_s, yh_sc + (ydest,), v + x3_sc + q_cond)
        if in_s:
            value -= joint.mutual_info(
                yh_s, y3_s, fixed + all_x3 + yh_sc + (ydest,) + q_cond
            )
        if best is None or value < best:
            best = value
    return float(best)


def theorem1_region(channel: ImrcChannel, inputs: ImrcInputSpec) -> list[RateInequality]:
    """Seven-bound achievable region for the N-relay channel.

    Each bound is a sum of hybrid terms; the (messages, destination,
    conditioning) compositions follow the joint-decoding analysis of the
    common/private splitting scheme.
    """
    joint = full_joint(channel, inputs)
    n = channel.relays

    def term(message_vars: Sequence[str], dest: int, extra: Sequence[str]) -> float:
        return hybrid_term(joint, message_vars, dest, extra, n)

    r1 = term(("X1",), 4, ("U2",))
    r2 = term(("X2",), 5, ("U1",))
    sum_a = term(("X1",), 4, ("U1", "U2")) + term(("X2", "U1"), 5, ())
    sum_b = term(("X2",), 5, ("U1", "U2")) + term(("X1", "U2"), 4, ())
    sum_c = term(("X1", "U2"), 4, ("U1",)) + term(("X2", "U1"), 5, ("U2",))
    two_r1 = (
        term(("X1",), 4, ("U1", "U2"))
        + term(("X1", "U2"), 4, ())
        + term(("X2", "U1"), 5, ("U2",))
    )
    two_r2 = (
        term(("X2",), 5, ("U1", "U2"))
        + term(("X2", "U1"), 5, ())
        + term(("X1", "U2"), 4, ("U1",))
    )

    values = (r1, r2, sum_a, sum_b, sum_c, two_r1, two_r2)
    coeffs = ((1, 0), (0, 1), (1, 1), (1, 1), (1, 1), (2, 1), (1, 2))
    return [
        RateInequality(a, b, rhs, label)
        for (a, b), rhs, label in zip(coeffs, values, BOUND_LABELS)
    ]


def corollary1_region(channel: ImrcChannel, inputs: ImrcInputSpec) -> list[RateInequality]:
    """Single-relay bound set, transcribed expression by expression.

    Every bound is a sum of two-way minima: decode the quantization
    directly, or decode the relay input and pay the compression penalty.
    This deliberately repeats none of the subset enumeration in
    ``theorem1_region`` so the two routes validate each other.
    """
    if channel.relays != 1:
        raise SchemaError("the transcribed bound set is defined for exactly one relay")
    joint = full_joint(channel, inputs)
    x3, y3, yh = x3_name(1), y3_name(1), yh3_name(1)
    mi = joint.mutual_info

    pen4 = mi((yh,), (y3,), ("X1", "U2", x3, "Y4", "Q"))
    pen5 = mi((yh,), (y3,), ("X2", "U1", x3, "Y5", "Q"))

    r1 = min(
        mi(("X1",), (yh, "Y4"), ("U2", x3, "Q")),
        mi(("X1", x3), ("Y4",), ("U2", "Q")) - pen4,
    )
    r2 = min(
        mi(("X2",), (yh, "Y5"), ("U1", x3, "Q")),
        mi(("X2", x3), ("Y5",), ("U1", "Q")) - pen5,
    )
    sum_a = min(
        mi(("X1",), (yh, "Y4"), ("U1", "U2", x3, "Q")),
        mi(("X1", x3), ("Y4",), ("U1", "U2", "Q")) - pen4,
    ) + min(
        mi(("X2", "U1"), (yh, "Y5"), (x3, "Q")),
        mi(("X2", "U1", x3), ("Y5",), ("Q",)) - pen5,
    )
    sum_b = min(
        mi(("X2",), (yh, "Y5"), ("U1", "U2", x3, "Q")),
        mi(("X2", x3), ("Y5",), ("U1", "U2", "Q")) - pen5,
    ) + min(
        mi(("X1", "U2"), (yh, "Y4"), (x3, "Q")),
        mi(("X1", "U2", x3), ("Y4",), ("Q",)) - pen4,
    )
    sum_c = min(
        mi(("X1", "U2"), (yh, "Y4"), ("U1", x3, "Q")),
        mi(("X1", "U2", x3), ("Y4",), ("U1", "Q")) - pen4,
    ) + min(
        mi(("X2", "U1"), (yh, "Y5"), ("U2", x3, "Q")),
        mi(("X2", "U1", x3), ("Y5",), ("U2", "Q")) - pen5,
    )
    two_r1 = (
        min(
            mi(("X1",), (yh, "Y4"), ("U1", "U2", x3, "Q")),
            mi(("X1", x3), ("Y4",), ("U1", "U2", "Q")) - pen4,
        )
        + min(
            mi(("X1", "U2"), (yh, "Y4"), (x3, "Q")),
            mi(("X1", "U2", x3), ("Y4",), ("Q",)) - pen4,
        )
        + min(
            mi(("X2", "U1"), (yh, "Y5"), ("U2", x3, "Q")),
            mi(("X2", "U1", x3), ("Y5",), ("U2", "Q")) - pen5,
        )
    )
    two_r2 = (
        min(
            mi(("X2",), (yh, "Y5"), ("U1", "U2", x3, "Q")),
            mi(("X2", x3), ("Y5",), ("U1", "U2", "Q")) - pen5,
        )
        + min(
            mi(("X2", "U1"), (yh, "Y5"), (x3, "Q")),
            mi(("X2", "U1", x3), ("Y5",), ("Q",)) - pen5,
        )
        + min(
            mi(("X1", "U2"), (yh, "Y4"), ("U1", x3, "Q")),
            mi(("X1", "U2", x3), ("Y4",), ("U1", "Q")) - pen4,
        )
    )

    values = (r1, r2, sum_a, sum_b, sum_c, two_r1, two_r2)
    coeffs = ((1, 0), (0, 1), (1, 1), (1, 1), (1, 1), (2, 1), (1, 2))
    return [
        RateInequality(a, b, rhs, label)
        for (a, b), rhs, label in zip(coeffs, values, BOUND_LABELS)
    ]
