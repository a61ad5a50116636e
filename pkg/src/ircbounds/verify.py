"""Cross-checks that pit independent evaluation routes against each other.

Suites:

* ``mi``      - information measures: chain rule, symmetry, nonnegativity,
                and a Monte-Carlo plug-in estimate against the exact value.
* ``regions`` - the N-relay subset evaluator against the transcribed
                single-relay bounds, degenerate-relay invariances, the
                relay-free reduction to a plain rate-splitting evaluator,
                and the polygon geometry against a brute-force grid.
* ``det``     - the deterministic class against its embedding into the
                general evaluator, and its collapse to the classical
                deterministic interference-channel region.
* ``gauss``   - a second, independent transcription of the closed-form
                inequalities, monotonicity in the link rate, the pair-swap
                involution, and the point-to-point limit.

Each check returns a ``CheckResult``; the command line prints one line per
check and fails when any check fails.  All randomness is seeded, so runs
are reproducible.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .det import DetInput, InjectiveDetSpec, det_joint, specialization_check, theorem2_region
from .dm import (
    ImrcChannel,
    ImrcInputSpec,
    corollary1_region,
    full_joint,
    theorem1_region,
)
from .errors import SchemaError
from .gauss import (
    GaussConfig,
    HkParams,
    cfn,
    derived_constants,
    gauss_region,
    sum_rate,
    swap_config,
    swap_params,
)
from .joint import ConditionalFactor, NamedJoint
from .regions import RateInequality, RateRegion2D, max_weighted

SUITES = ("mi", "regions", "det", "gauss")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"[{tag}] {self.name}: {self.detail}"


# -- random instance generators ------------------------------------------------

def random_joint(rng: np.random.Generator, sizes: Sequence[int], names: Sequence[str]) -> NamedJoint:
    table = rng.dirichlet(np.ones(int(np.prod(sizes)))).reshape(sizes)
    return NamedJoint(tuple(zip(names, sizes)), table)


def random_binary_relay_instance(
    rng: np.random.Generator, q_size: int = 1
) -> tuple[ImrcChannel, ImrcInputSpec]:
    """Random single-relay instance with all-binary alphabets."""
    law = rng.dirichlet(np.ones(8), size=8).reshape(2, 2, 2, 2, 2, 2)
    channel = ImrcChannel(
        relays=1,
        x1_size=2,
        x2_size=2,
        x3_sizes=(2,),
        y3_sizes=(2,),
        y4_size=2,
        y5_size=2,
        law=ConditionalFactor(("Y3_1", "Y4", "Y5"), ("X1", "X2", "X3_1"), law),
    )
    inputs = ImrcInputSpec(
        p_q=rng.dirichlet(np.ones(q_size)),
        p_u1x1=rng.dirichlet(np.ones(4), size=q_size).reshape(q_size, 2, 2),
        p_u2x2=rng.dirichlet(np.ones(4), size=q_size).reshape(q_size, 2, 2),
        p_x3=(rng.dirichlet(np.ones(2), size=q_size),),
        p_yh3=(rng.dirichlet(np.ones(2), size=(2, 2, q_size)),),
    )
    return channel, inputs


def random_det_spec(
    rng: np.random.Generator,
    x1_size: int = 3,
    x2_size: int = 3,
    t1_size: int = 2,
    t2_size: int = 2,
    x3_size: int = 2,
    r0: float | None = None,
) -> InjectiveDetSpec:
    """Random valid deterministic spec.

    Validity is guaranteed by construction: the relay observation is drawn
    as a function of the two interference descriptions (which is exactly
    the recoverability condition), and the destination maps draw a fresh
    injection of the interfering description for every own-symbol.
    """
    t1 = rng.integers(0, t1_size, size=x1_size)
    t1[rng.integers(0, x1_size)] = t1_size - 1  # keep the declared size honest
    t2 = rng.integers(0, t2_size, size=x2_size)
    t2[rng.integers(0, x2_size)] = t2_size - 1
    y4 = np.stack([rng.permutation(t2_size) for _ in range(x1_size)])
    y5 = np.stack([rng.permutation(t1_size) for _ in range(x2_size)])
    phi = rng.integers(0, t1_size * t2_size, size=(t1_size, t2_size))
    phi.flat[rng.integers(0, phi.size)] = t1_size * t2_size - 1
    y3 = phi[t1[:, None], t2[None, :]]
    if r0 is None:
        r0 = math.log2(x3_size)
    return InjectiveDetSpec(t1=t1, t2=t2, y4=y4, y5=y5, y3=y3, x3_size=x3_size, r0=r0)


def random_det_input(rng: np.random.Generator, spec: InjectiveDetSpec, q_size: int = 1) -> DetInput:
    return DetInput(
        p_q=rng.dirichlet(np.ones(q_size)),
        p_x1=rng.dirichlet(np.ones(spec.x1_size), size=q_size),
        p_x2=rng.dirichlet(np.ones(spec.x2_size), size=q_size),
    )


def random_gauss_instance(rng: np.random.Generator) -> tuple[GaussConfig, HkParams]:
    gains = rng.uniform(-2.0, 2.0, size=6)
    config = GaussConfig(
        g31=gains[0], g32=gains[1], g41=gains[2], g42=gains[3], g51=gains[4], g52=gains[5],
        P=float(10 ** rng.uniform(-1, 1.7)),
        R0=float(rng.uniform(0.0, 2.0)),
    )
    params = HkParams(
        alpha1=float(rng.uniform()),
        alpha2=float(rng.uniform()),
        sigma2=float(10 ** rng.uniform(-0.7, 1.3)),
    )
    return config, params


# -- independent oracles --------------------------------------------------------

def plugin_mi_estimate(
    joint: NamedJoint,
    a: Sequence[str],
    b: Sequence[str],
    c: Sequence[str],
    samples: int,
    rng: np.random.Generator,
) -> tuple[float, float]:
    """Plug-in estimate of I(A;B|C) from a multinomial sample, with its
    delta-method standard error.

    The estimate is the sample mean of f = log2(p^(abc) p^(c) / (p^(ac)
    p^(bc))) under the empirical distribution; the standard error is the
    empirical standard deviation of f over sqrt(n).
    """
    flat = joint.table.reshape(-1)
    counts = rng.multinomial(samples, flat).reshape(joint.table.shape)
    emp = NamedJoint(joint.variables, counts / samples)
    p_abc = emp._marginal_table(tuple(a) + tuple(b) + tuple(c))
    # Recover axis placement inside the abc marginal (canonical joint order).
    kept = [n for n, _ in emp.variables if n in set(a) | set(b) | set(c)]
    ax = {name: axis for axis, name in enumerate(kept)}
    sum_b_axes = tuple(ax[n] for n in b)
    sum_a_axes = tuple(ax[n] for n in a)
    sum_ab_axes = tuple(sorted(sum_a_axes + sum_b_axes))
    p_ac = p_abc.sum(axis=sum_b_axes, keepdims=True)
    p_bc = p_abc.sum(axis=sum_a_axes, keepdims=True)
    p_c = p_abc.sum(axis=sum_ab_axes, keepdims=True)
    mask = p_abc > 0.0
    f = np.zeros_like(p_abc)
    f[mask] = np.log2(
        (p_abc[mask] * np.broadcast_to(p_c, p_abc.shape)[mask])
        / (np.broadcast_to(p_ac, p_abc.shape)[mask] * np.broadcast_to(p_bc, p_abc.shape)[mask])
    )
    estimate = float((p_abc[mask] * f[mask]).sum())
    second = float((p_abc[mask] * f[mask] ** 2).sum())
    variance = max(second - estimate**2, 0.0)
    return estimate, math.sqrt(variance / samples)


def rate_split_region(joint: NamedJoint) -> list[float]:
    """Plain two-pair rate-splitting bounds with no relay terms.

    Used as the oracle for relay-free instances: when the relay
    observation, input and quantization are all constant, the seven-bound
    region must collapse to these expressions.
    """
    mi = joint.mutual_info
    return [
        mi(("X1",), ("Y4",), ("U2", "Q")),
        mi(("X2",), ("Y5",), ("U1", "Q")),
        mi(("X1",), ("Y4",), ("U1", "U2", "Q")) + mi(("X2", "U1"), ("Y5",), ("Q",)),
        mi(("X2",), ("Y5",), ("U1", "U2", "Q")) + mi(("X1", "U2"), ("Y4",), ("Q",)),
        mi(("X1", "U2"), ("Y4",), ("U1", "Q")) + mi(("X2", "U1"), ("Y5",), ("U2", "Q")),
        mi(("X1",), ("Y4",), ("U1", "U2", "Q"))
        + mi(("X1", "U2"), ("Y4",), ("Q",))
        + mi(("X2", "U1"), ("Y5",), ("U2", "Q")),
        mi(("X2",), ("Y5",), ("U1", "U2", "Q"))
        + mi(("X2", "U1"), ("Y5",), ("Q",))
        + mi(("X1", "U2"), ("Y4",), ("U1", "Q")),
    ]


def classical_det_ic_region(spec: InjectiveDetSpec, inputs: DetInput) -> list[float]:
    """The classical deterministic interference-channel bounds (no relay).

    Exactly what the class region must collapse to when the relay
    observation is constant or the link rate is zero.
    """
    joint = det_joint(spec, inputs)
    h = joint.cond_entropy
    return [
        h(("Y4p",), ("T2", "Q")),
        h(("Y5p",), ("T1", "Q")),
        h(("Y4p",), ("T1", "T2", "Q")) + h(("Y5p",), ("Q",)),
        h(("Y5p",), ("T1", "T2", "Q")) + h(("Y4p",), ("Q",)),
        h(("Y4p",), ("T1", "Q")) + h(("Y5p",), ("T2", "Q")),
        h(("Y4p",), ("T1", "T2", "Q")) + h(("Y4p",), ("Q",)) + h(("Y5p",), ("T2", "Q")),
        h(("Y5p",), ("T1", "T2", "Q")) + h(("Y5p",), ("Q",)) + h(("Y4p",), ("T1", "Q")),
    ]


def reference_gauss_rhs(config: GaussConfig, params: HkParams) -> list[float]:
    """Second transcription of the 28 closed-form bounds.

    Written straight down, term by term, with every expression inlined;
    shares nothing with ``gauss_region`` beyond the float type.  The two
    contested single-R0 sum bounds are written with the penalty attachment
    that matches every other bound (the ``pattern`` reading).
    """
    g31, g32, g41, g42, g51, g52 = (
        config.g31, config.g32, config.g41, config.g42, config.g51, config.g52,
    )
    P, R0 = config.P, config.R0
    al1, al2, s2 = params.alpha1, params.alpha2, params.sigma2

    def C(x: float) -> float:
        return 0.5 * math.log2(1.0 + x)

    a1 = g31 * g42 - g32 * g41
    a2 = g31 * g52 - g32 * g51
    b11 = g31**2 + (1 + s2) * g41**2
    b12 = g32**2 + (1 + s2) * g42**2
    b21 = g31**2 + (1 + s2) * g51**2
    b22 = g32**2 + (1 + s2) * g52**2
    C1 = C(((g32**2 + g42**2) * al2 * P + 1) / ((g42**2 * al2 * P + 1) * s2))
    C2 = C(((g31**2 + g51**2) * al1 * P + 1) / ((g51**2 * al1 * P + 1) * s2))

    out = [
        C((b11 * P + a1**2 * al2 * P**2) / (1 + s2 + b12 * al2 * P)),
        C(g41**2 * P / (g42**2 * al2 * P + 1)) - C1 + R0,
        C((b22 * P + a2**2 * al1 * P**2) / (1 + s2 + b21 * al1 * P)),
        C(g52**2 * P / (g51**2 * al1 * P + 1)) - C2 + R0,
        # sum-rate family built on (private 1 at 4) + (message 2 with common 1 at 5)
        C((b11 * al1 * P + a1**2 * al1 * al2 * P**2) / (1 + s2 + b12 * al2 * P))
        + C((b21 * (1 - al1) * P + b22 * P + a2**2 * P**2) / (1 + s2 + b21 * al1 * P)),
        C(g41**2 * al1 * P / (g42**2 * al2 * P + 1)) - C1
        + C((g52**2 * P + (1 - al1) * g51**2 * P) / (g51**2 * al1 * P + 1)) - C2 + 2 * R0,
        C((b11 * al1 * P + a1**2 * al1 * al2 * P**2) / (1 + s2 + b12 * al2 * P))
        + C((g52**2 * P + (1 - al1) * g51**2 * P) / (g51**2 * al1 * P + 1)) - C2 + R0,
        C((b21 * (1 - al1) * P + b22 * P + a2**2 * P**2) / (1 + s2 + b21 * al1 * P))
        + C(g41**2 * al1 * P / (g42**2 * al2 * P + 1)) - C1 + R0,
        # sum-rate family built on (private 2 at 5) + (message 1 with common 2 at 4)
        C((b22 * al2 * P + a2**2 * al1 * al2 * P**2) / (1 + s2 + b21 * al1 * P))
        + C((b12 * (1 - al2) * P + b11 * P + a1**2 * P**2) / (1 + s2 + b12 * al2 * P)),
        C(g52**2 * al2 * P / (g51**2 * al1 * P + 1)) - C2
        + C((g41**2 * P + (1 - al2) * g42**2 * P) / (g42**2 * al2 * P + 1)) - C1 + 2 * R0,
        C((b22 * al2 * P + a2**2 * al1 * al2 * P**2) / (1 + s2 + b21 * al1 * P))
        + C((g41**2 * P + (1 - al2) * g42**2 * P) / (g42**2 * al2 * P + 1)) - C1 + R0,
        C((b12 * (1 - al2) * P + b11 * P + a1**2 * P**2) / (1 + s2 + b12 * al2 * P))
        + C(g52**2 * al2 * P / (g51**2 * al1 * P + 1)) - C2 + R0,
        # sum-rate family built on both mixed decoders
        C((b12 * (1 - al2) * P + b11 * al1 * P + a1**2 * al1 * P**2) / (1 + s2 + b12 * al2 * P))
        + C((b21 * (1 - al1) * P + b22 * al2 * P + a2**2 * al2 * P**2) / (1 + s2 + b21 * al1 * P)),
        C((g41**2 * al1 * P + (1 - al2) * g42**2 * P) / (g42**2 * al2 * P + 1)) - C1
        + C((g52**2 * al2 * P + (1 - al1) * g51**2 * P) / (g51**2 * al1 * P + 1)) - C2 + 2 * R0,
        C((b12 * (1 - al2) * P + b11 * al1 * P + a1**2 * al1 * P**2) / (1 + s2 + b12 * al2 * P))
        + C((g52**2 * al2 * P + (1 - al1) * g51**2 * P) / (g51**2 * al1 * P + 1)) - C2 + R0,
        C((b21 * (1 - al1) * P + b22 * al2 * P + a2**2 * al2 * P**2) / (1 + s2 + b21 * al1 * P))
        + C((g41**2 * al1 * P + (1 - al2) * g42**2 * P) / (g42**2 * al2 * P + 1)) - C1 + R0,
    ]
    # 2*R1 + R2: six bounds.
    out += [
        C((b11 * al1 * P + a1**2 * al1 * al2 * P**2) / (1 + s2 + b12 * al2 * P))
        + C((b12 * (1 - al2) * P + b11 * P + a1**2 * P**2) / (1 + s2 + b12 * al2 * P))
        + C((b21 * (1 - al1) * P + b22 * al2 * P + a2**2 * al2 * P**2) / (1 + s2 + b21 * al1 * P)),
        C(g41**2 * al1 * P / (g42**2 * al2 * P + 1))
        + C((g41**2 * P + (1 - al2) * g42**2 * P) / (g42**2 * al2 * P + 1))
        + C((g52**2 * al2 * P + (1 - al1) * g51**2 * P) / (g51**2 * al1 * P + 1))
        + 3 * R0 - 2 * C1 - C2,
        C(g41**2 * al1 * P / (g42**2 * al2 * P + 1))
        + C((g41**2 * P + (1 - al2) * g42**2 * P) / (g42**2 * al2 * P + 1))
        + 2 * R0 - 2 * C1
        + C((b21 * (1 - al1) * P + b22 * al2 * P + a2**2 * al2 * P**2) / (1 + s2 + b21 * al1 * P)),
        C((b11 * al1 * P + a1**2 * al1 * al2 * P**2) / (1 + s2 + b12 * al2 * P))
        + C((b12 * (1 - al2) * P + b11 * P + a1**2 * P**2) / (1 + s2 + b12 * al2 * P))
        + C((g52**2 * al2 * P + (1 - al1) * g51**2 * P) / (g51**2 * al1 * P + 1)) + R0 - C2,
        C((b11 * al1 * P + a1**2 * al1 * al2 * P**2) / (1 + s2 + b12 * al2 * P))
        + C((g41**2 * P + (1 - al2) * g42**2 * P) / (g42**2 * al2 * P + 1))
        + C((g52**2 * al2 * P + (1 - al1) * g51**2 * P) / (g51**2 * al1 * P + 1))
        + 2 * R0 - C1 - C2,
        C((b11 * al1 * P + a1**2 * al1 * al2 * P**2) / (1 + s2 + b12 * al2 * P))
        + C((b21 * (1 - al1) * P + b22 * al2 * P + a2**2 * al2 * P**2) / (1 + s2 + b21 * al1 * P))
        + C((g41**2 * P + (1 - al2) * g42**2 * P) / (g42**2 * al2 * P + 1)) + R0 - C1,
    ]
    # R1 + 2*R2: the same six with indices 1 and 2 switched.
    out += [
        C((b22 * al2 * P + a2**2 * al2 * al1 * P**2) / (1 + s2 + b21 * al1 * P))
        + C((b21 * (1 - al1) * P + b22 * P + a2**2 * P**2) / (1 + s2 + b21 * al1 * P))
        + C((b12 * (1 - al2) * P + b11 * al1 * P + a1**2 * al1 * P**2) / (1 + s2 + b12 * al2 * P)),
        C(g52**2 * al2 * P / (g51**2 * al1 * P + 1))
        + C((g52**2 * P + (1 - al1) * g51**2 * P) / (g51**2 * al1 * P + 1))
        + C((g41**2 * al1 * P + (1 - al2) * g42**2 * P) / (g42**2 * al2 * P + 1))
        + 3 * R0 - 2 * C2 - C1,
        C(g52**2 * al2 * P / (g51**2 * al1 * P + 1))
        + C((g52**2 * P + (1 - al1) * g51**2 * P) / (g51**2 * al1 * P + 1))
        + 2 * R0 - 2 * C2
        + C((b12 * (1 - al2) * P + b11 * al1 * P + a1**2 * al1 * P**2) / (1 + s2 + b12 * al2 * P)),
        C((b22 * al2 * P + a2**2 * al2 * al1 * P**2) / (1 + s2 + b21 * al1 * P))
        + C((b21 * (1 - al1) * P + b22 * P + a2**2 * P**2) / (1 + s2 + b21 * al1 * P))
        + C((g41**2 * al1 * P + (1 - al2) * g42**2 * P) / (g42**2 * al2 * P + 1)) + R0 - C1,
        C((b22 * al2 * P + a2**2 * al2 * al1 * P**2) / (1 + s2 + b21 * al1 * P))
        + C((g52**2 * P + (1 - al1) * g51**2 * P) / (g51**2 * al1 * P + 1))
        + C((g41**2 * al1 * P + (1 - al2) * g42**2 * P) / (g42**2 * al2 * P + 1))
        + 2 * R0 - C2 - C1,
        C((b22 * al2 * P + a2**2 * al2 * al1 * P**2) / (1 + s2 + b21 * al1 * P))
        + C((b12 * (1 - al2) * P + b11 * al1 * P + a1**2 * al1 * P**2) / (1 + s2 + b12 * al2 * P))
        + C((g52**2 * P + (1 - al1) * g51**2 * P) / (g51**2 * al1 * P + 1)) + R0 - C2,
    ]
    return out


def grid_max_sum(region: RateRegion2D, points: int = 2000) -> tuple[float, float]:
    """Brute-force max of R1 + R2 over a feasibility grid.

    Returns (value, pitch_bound) where pitch_bound is the largest amount
    by which the grid max may undershoot the true max.
    """
    effective = region.reduced()
    if any(rhs < 0 for rhs in effective.values()):
        return 0.0, 0.0
    r1_max = min(rhs / a for (a, b), rhs in effective.items() if a > 0)
    r2_max = min(rhs / b for (a, b), rhs in effective.items() if b > 0)
    xs = np.linspace(0.0, r1_max, points)
    ys = np.linspace(0.0, r2_max, points)
    feasible = np.ones((points, points), dtype=bool)
    for (a, b), rhs in effective.items():
        feasible &= a * xs[:, None] + b * ys[None, :] <= rhs + 1e-12
    total = xs[:, None] + ys[None, :]
    value = float(total[feasible].max()) if feasible.any() else 0.0
    pitch = (r1_max + r2_max) / (points - 1)
    return value, pitch


# -- checks ---------------------------------------------------------------------

def _agg(name: str, worst: float, tol: float, extra: str = "") -> CheckResult:
    detail = f"max deviation {worst:.3e} (tolerance {tol:.0e}){extra}"
    return CheckResult(name, worst <= tol, detail)


def check_mi_identities(n_joints: int = 100, seed: int = 2021) -> CheckResult:
    """Chain rule H(A,B|C) = H(A|C) + H(B|A,C) and MI symmetry."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_joints):
        sizes = tuple(int(s) for s in rng.integers(2, 5, size=3))
        joint = random_joint(rng, sizes, ("A", "B", "C"))
        chain = abs(
            joint.cond_entropy(("A", "B"), ("C",))
            - joint.cond_entropy(("A",), ("C",))
            - joint.cond_entropy(("B",), ("A", "C"))
        )
        sym = abs(
            joint.mutual_info(("A",), ("B",), ("C",))
            - joint.mutual_info(("B",), ("A",), ("C",))
        )
        nonneg = -min(
            0.0,
            joint.mutual_info(("A",), ("B",)),
            joint.cond_entropy(("A",), ("B", "C")),
        )
        worst = max(worst, chain, sym, nonneg)
    return _agg(f"mi-identities ({n_joints} random joints)", worst, 1e-10)


def check_mi_monte_carlo(
    n_joints: int = 10, samples: int = 1_000_000, seed: int = 514
) -> CheckResult:
    """Exact conditional MI against a plug-in multinomial estimate."""
    rng = np.random.default_rng(seed)
    worst_z = 0.0
    for _ in range(n_joints):
        sizes = tuple(int(s) for s in rng.integers(2, 5, size=3))
        joint = random_joint(rng, sizes, ("A", "B", "C"))
        exact = joint.mutual_info(("A",), ("B",), ("C",))
        estimate, se = plugin_mi_estimate(joint, ("A",), ("B",), ("C",), samples, rng)
        worst_z = max(worst_z, abs(exact - estimate) / max(se, 1e-15))
    detail = f"max |z| {worst_z:.2f} over {n_joints} joints ({samples} samples, limit 3)"
    return CheckResult("mi-monte-carlo", worst_z <= 3.0, detail)


def check_theorem1_vs_corollary1(n_instances: int = 20, seed: int = 99) -> CheckResult:
    """Subset evaluator against the transcribed single-relay bounds."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for i in range(n_instances):
        channel, inputs = random_binary_relay_instance(rng, q_size=1 + i % 2)
        general = theorem1_region(channel, inputs)
        transcribed = corollary1_region(channel, inputs)
        for g, c in zip(general, transcribed):
            worst = max(worst, abs(g.rhs - c.rhs))
    return _agg(f"theorem1-vs-corollary1 ({n_instances} binary instances)", worst, 1e-12)


def check_constant_relay_invariance(n_instances: int = 5, seed: int = 7) -> CheckResult:
    """Appending a relay with a constant observation changes no bound."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_instances):
        channel, inputs = random_binary_relay_instance(rng)
        base = theorem1_region(channel, inputs)
        # Embed as a 2-relay channel whose second relay sees nothing.
        law1 = channel.law.table  # (x1, x2, x3, y3, y4, y5)
        law2 = np.zeros((2, 2, 2, 2, 2, 1, 2, 2), dtype=np.float64)
        for x32 in range(2):
            law2[:, :, :, x32, :, 0, :, :] = law1
        channel2 = ImrcChannel(
            relays=2,
            x1_size=2,
            x2_size=2,
            x3_sizes=(2, 2),
            y3_sizes=(2, 1),
            y4_size=2,
            y5_size=2,
            law=ConditionalFactor(
                ("Y3_1", "Y3_2", "Y4", "Y5"), ("X1", "X2", "X3_1", "X3_2"), law2
            ),
        )
        inputs2 = ImrcInputSpec(
            p_q=inputs.p_q,
            p_u1x1=inputs.p_u1x1,
            p_u2x2=inputs.p_u2x2,
            p_x3=(inputs.p_x3[0], rng.dirichlet(np.ones(2), size=1)),
            p_yh3=(inputs.p_yh3[0], rng.dirichlet(np.ones(2), size=(1, 2, 1))),
        )
        extended = theorem1_region(channel2, inputs2)
        for b0, b1 in zip(base, extended):
            worst = max(worst, abs(b0.rhs - b1.rhs))
    return _agg(f"constant-relay invariance ({n_instances} instances)", worst, 1e-10)


def check_relay_free_reduction(n_instances: int = 10, seed: int = 31) -> CheckResult:
    """Degenerate relay: region equals the plain rate-splitting bounds."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_instances):
        law = rng.dirichlet(np.ones(4), size=4).reshape(2, 2, 1, 1, 2, 2)
        channel = ImrcChannel(
            relays=1,
            x1_size=2,
            x2_size=2,
            x3_sizes=(1,),
            y3_sizes=(1,),
            y4_size=2,
            y5_size=2,
            law=ConditionalFactor(("Y3_1", "Y4", "Y5"), ("X1", "X2", "X3_1"), law),
        )
        inputs = ImrcInputSpec(
            p_q=np.array([1.0]),
            p_u1x1=rng.dirichlet(np.ones(4), size=1).reshape(1, 2, 2),
            p_u2x2=rng.dirichlet(np.ones(4), size=1).reshape(1, 2, 2),
            p_x3=(np.ones((1, 1)),),
            p_yh3=(np.ones((1, 1, 1, 1)),),
        )
        bounds = corollary1_region(channel, inputs)
        oracle = rate_split_region(full_joint(channel, inputs))
        for b, o in zip(bounds, oracle):
            worst = max(worst, abs(b.rhs - o))
    return _agg(f"relay-free reduction ({n_instances} instances)", worst, 1e-12)


def check_geometry_grid(n_regions: int = 50, seed: int = 404) -> CheckResult:
    """Vertex-based sum-rate max against a 2000 x 2000 feasibility grid."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_regions):
        ineqs = [
            RateInequality(1, 0, float(rng.uniform(0.1, 3.0))),
            RateInequality(0, 1, float(rng.uniform(0.1, 3.0))),
            RateInequality(1, 1, float(rng.uniform(0.1, 5.0))),
            RateInequality(2, 1, float(rng.uniform(0.1, 7.0))),
            RateInequality(1, 2, float(rng.uniform(0.1, 7.0))),
        ]
        region = RateRegion2D(ineqs)
        exact, _ = max_weighted(region, 1.0, 1.0)
        gridded, pitch = grid_max_sum(region)
        gap = exact - gridded
        if gap < -1e-9 or gap > pitch + 1e-9:
            worst = max(worst, abs(gap))
    return _agg(f"geometry-vs-grid ({n_regions} random regions)", worst, 1e-9)


def check_det_specialization(n_specs: int = 10, seed: int = 1212) -> CheckResult:
    """Class bounds against the embedded general-evaluator route."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    # Fixed modulo-2 instance first.
    mod2 = InjectiveDetSpec(
        t1=np.array([0, 1]),
        t2=np.array([0, 1]),
        y4=np.array([[0, 1], [1, 0]]),
        y5=np.array([[0, 1], [1, 0]]),
        y3=np.array([[0, 1], [1, 0]]),
        x3_size=2,
        r0=1.0,
    )
    worst = max(
        worst,
        specialization_check(
            mod2, DetInput(np.array([1.0]), np.array([[0.5, 0.5]]), np.array([[0.5, 0.5]]))
        ),
    )
    for i in range(n_specs):
        spec = random_det_spec(rng)
        inputs = random_det_input(rng, spec, q_size=1 + i % 2)
        worst = max(worst, specialization_check(spec, inputs))
    return _agg(f"det-specialization (modulo-2 + {n_specs} random)", worst, 1e-9)


def check_det_classical_reduction(n_specs: int = 10, seed: int = 77) -> CheckResult:
    """Constant relay observation: class region equals the classical one."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_specs):
        spec = random_det_spec(rng, r0=float(rng.uniform(0.0, 2.0)))
        flat = InjectiveDetSpec(
            t1=spec.t1,
            t2=spec.t2,
            y4=spec.y4,
            y5=spec.y5,
            y3=np.zeros_like(spec.y3),
            x3_size=1,
            r0=spec.r0,
        )
        inputs = random_det_input(rng, flat)
        bounds = theorem2_region(flat, inputs)
        oracle = classical_det_ic_region(flat, inputs)
        for b, o in zip(bounds, oracle):
            worst = max(worst, abs(b.rhs - o))
    return _agg(f"det-classical reduction ({n_specs} instances)", worst, 1e-10)


def check_det_single_pair(n_specs: int = 10, seed: int = 909) -> CheckResult:
    """Degenerate second source: the R1 bound equals its direct expression."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_specs):
        x1s = 4
        t1 = rng.permutation(np.array([0, 1] + list(rng.integers(0, 2, size=x1s - 2))))
        phi = rng.integers(0, 3, size=2)
        spec = InjectiveDetSpec(
            t1=t1,
            t2=np.array([0]),
            y4=rng.permutation(x1s).reshape(x1s, 1),
            y5=np.arange(2).reshape(1, 2),
            y3=phi[t1].reshape(x1s, 1),
            x3_size=2,
            r0=float(rng.uniform(0.0, 2.0)),
        )
        inputs = DetInput(
            p_q=np.array([1.0]),
            p_x1=rng.dirichlet(np.ones(x1s), size=1),
            p_x2=np.array([[1.0]]),
        )
        bounds = theorem2_region(spec, inputs)
        joint = det_joint(spec, inputs)
        direct = min(
            joint.cond_entropy(("Y4p",), ("Q",)) + joint.cond_entropy(("Y3",), ("Y4p", "Q")),
            joint.cond_entropy(("Y4p",), ("Q",)) + spec.r0,
        )
        worst = max(worst, abs(bounds[0].rhs - direct))
    return _agg(f"det-single-pair reduction ({n_specs} instances)", worst, 1e-10)


def check_gauss_transcriptions(n_draws: int = 100, seed: int = 333) -> CheckResult:
    """Implementation against the independent formula transcription."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_draws):
        config, params = random_gauss_instance(rng)
        ours = [ineq.rhs for ineq in gauss_region(config, params)]
        reference = reference_gauss_rhs(config, params)
        worst = max(worst, max(abs(a - b) for a, b in zip(ours, reference)))
    return _agg(f"gauss dual transcription ({n_draws} draws)", worst, 1e-12)


def check_gauss_r0_monotone(n_configs: int = 20, seed: int = 555) -> CheckResult:
    """Sum rate never decreases along R0 at fixed split parameters."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_configs):
        config, params = random_gauss_instance(rng)
        values = [
            sum_rate(
                GaussConfig(
                    g31=config.g31, g32=config.g32, g41=config.g41, g42=config.g42,
                    g51=config.g51, g52=config.g52, P=config.P, R0=r0,
                ),
                params,
            )
            for r0 in (0.0, 0.5, 1.0, 2.0)
        ]
        for lo, hi in zip(values, values[1:]):
            worst = max(worst, lo - hi)
    return _agg(f"gauss R0 monotonicity ({n_configs} configs)", worst, 1e-12)


def check_gauss_swap_involution(n_draws: int = 50, seed: int = 666) -> CheckResult:
    """Swapping the pair indices twice reproduces every bound."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_draws):
        config, params = random_gauss_instance(rng)
        once = swap_config(config), swap_params(params)
        twice = swap_config(once[0]), swap_params(once[1])
        ours = [i.rhs for i in gauss_region(config, params)]
        back = [i.rhs for i in gauss_region(twice[0], twice[1])]
        worst = max(worst, max(abs(a - b) for a, b in zip(ours, back)))
    return _agg(f"gauss swap involution ({n_draws} draws)", worst, 1e-12)


def check_gauss_c_decreasing(n_draws: int = 50, seed: int = 888) -> CheckResult:
    """The quantization penalties shrink as the quantizer coarsens."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_draws):
        config, params = random_gauss_instance(rng)
        finer = derived_constants(config, params)
        coarser = derived_constants(
            config, HkParams(params.alpha1, params.alpha2, params.sigma2 * 4.0)
        )
        worst = max(worst, coarser.c1 - finer.c1, coarser.c2 - finer.c2)
    return _agg(f"gauss penalty monotone in sigma2 ({n_draws} draws)", worst, 1e-12)


def check_gauss_point_to_point(tol: float = 1e-3) -> CheckResult:
    """Silent relay and cross links: sum rate splits into two clean links."""
    config = GaussConfig(g31=0, g32=0, g41=1.0, g42=0, g51=0, g52=0.8, P=10.0, R0=0.0)
    params = HkParams(1.0, 1.0, 1e6)
    value = sum_rate(config, params)
    want = cfn(config.g41**2 * config.P) + cfn(config.g52**2 * config.P)
    return _agg("gauss point-to-point limit", abs(value - want), tol)


def check_gauss_c_swap_gap(seed: int = 111) -> CheckResult:
    """Report (informationally) how far the two penalty readings sit apart."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(50):
        config, params = random_gauss_instance(rng)
        pattern = [i.rhs for i in gauss_region(config, params, "pattern")]
        verbatim = [i.rhs for i in gauss_region(config, params, "verbatim")]
        worst = max(worst, max(abs(a - b) for a, b in zip(pattern, verbatim)))
    return CheckResult(
        "gauss c-swap readings", True, f"max rhs gap between readings {worst:.3e} (informational)"
    )


SUITE_CHECKS: dict[str, tuple[Callable[[], CheckResult], ...]] = {
    "mi": (check_mi_identities, check_mi_monte_carlo),
    "regions": (
        check_theorem1_vs_corollary1,
        check_constant_relay_invariance,
        check_relay_free_reduction,
        check_geometry_grid,
    ),
    "det": (
        check_det_specialization,
        check_det_classical_reduction,
        check_det_single_pair,
    ),
    "gauss": (
        check_gauss_transcriptions,
        check_gauss_r0_monotone,
        check_gauss_swap_involution,
        check_gauss_c_decreasing,
        check_gauss_point_to_point,
        check_gauss_c_swap_gap,
    ),
}


def run_suite(name: str) -> list[CheckResult]:
    if name == "all":
        return [check() for suite in SUITES for check in SUITE_CHECKS[suite]]
    if name not in SUITE_CHECKS:
        raise SchemaError(f"unknown suite {name!r}; choose from {SUITES + ('all',)}")
    return [check() for check in SUITE_CHECKS[name]]
