"""Closed-form inner bound for the Gaussian interference channel with a
compress-and-forward relay behind a shared noiseless link.

Channel: unit-power-noise Gaussian links with real gains g31, g32 into the
relay, g41, g42 into destination 4 and g51, g52 into destination 5, equal
source power P, a relay link of rate R0, and a Gaussian quantizer of
variance sigma2 at the relay.  Rate splitting assigns the fraction
alpha_i of source i's power to its private stream, the rest to its common
stream.

All 28 rate inequalities are emitted in closed form through the capacity
function cfn(x) = 0.5 * log2(1 + x).  The derived constants bundle the
recurring quadratic forms: a1/a2 capture coherent relay+direct combining,
b11..b22 the per-destination received powers inflated by the quantizer
noise, and c1/c2 the quantization penalties paid when a destination
decodes the relay input directly.

Two single-R0 sum-rate bounds admit a second reading of which penalty
(c1 vs c2) they carry; see ``gauss_region``'s ``c_swap`` flag.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import SchemaError
from .regions import RateInequality, RateRegion2D, max_weighted

C_SWAP_MODES = ("pattern", "verbatim")


def cfn(x: float) -> float:
    """Gaussian capacity function 0.5 * log2(1 + x) in bits."""
    if x < 0.0:
        raise SchemaError(f"cfn needs a nonnegative argument, got {x}")
    return 0.5 * math.log2(1.0 + x)


@dataclass(frozen=True)
class GaussConfig:
    """Channel gains, source power and relay-link rate."""

    g31: float
    g32: float
    g41: float
    g42: float
    g51: float
    g52: float
    P: float
    R0: float

    def __post_init__(self) -> None:
        if not (self.P > 0.0 and math.isfinite(self.P)):
            raise SchemaError(f"P must be positive and finite, got {self.P}")
        if not (self.R0 >= 0.0 and math.isfinite(self.R0)):
            raise SchemaError(f"R0 must be >= 0 and finite, got {self.R0}")


@dataclass(frozen=True)
class HkParams:
    """Private-power fractions and quantizer variance."""

    alpha1: float
    alpha2: float
    sigma2: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.alpha1 <= 1.0:
            raise SchemaError(f"alpha1 must lie in [0, 1], got {self.alpha1}")
        if not 0.0 <= self.alpha2 <= 1.0:
            raise SchemaError(f"alpha2 must lie in [0, 1], got {self.alpha2}")
        if not (self.sigma2 > 0.0 and math.isfinite(self.sigma2)):
            raise SchemaError(f"sigma2 must be positive and finite, got {self.sigma2}")


@dataclass(frozen=True)
class DerivedConstants:
    """Recurring quadratic forms of a (config, params) pair.  c1/c2 in bits."""

    a1: float
    a2: float
    b11: float
    b12: float
    b21: float
    b22: float
    c1: float
    c2: float


def derived_constants(config: GaussConfig, params: HkParams) -> DerivedConstants:
    g31, g32 = config.g31, config.g32
    g41, g42 = config.g41, config.g42
    g51, g52 = config.g51, config.g52
    P, s2 = config.P, params.sigma2
    a1 = g31 * g42 - g32 * g41
    a2 = g31 * g52 - g32 * g51
    b11 = g31**2 + (1 + s2) * g41**2
    b12 = g32**2 + (1 + s2) * g42**2
    b21 = g31**2 + (1 + s2) * g51**2
    b22 = g32**2 + (1 + s2) * g52**2
    c1 = cfn(
        ((g32**2 + g42**2) * params.alpha2 * P + 1) / ((g42**2 * params.alpha2 * P + 1) * s2)
    )
    c2 = cfn(
        ((g31**2 + g51**2) * params.alpha1 * P + 1) / ((g51**2 * params.alpha1 * P + 1) * s2)
    )
    return DerivedConstants(a1, a2, b11, b12, b21, b22, c1, c2)


@dataclass(frozen=True)
class _Blocks:
    """The sixteen capacity terms every inequality is assembled from.

    Per destination there are four decoding events (own private stream;
    own full message; own message plus the interfering common stream; own
    private plus the interfering common stream), each with a relay-aided
    variant (``*_hat``, quantization inside the channel) and a direct
    variant (``*_dir``, relay input decoded, penalty c1/c2 paid
    separately).
    """

    t4_priv_hat: float
    t4_priv_dir: float
    t4_full_hat: float
    t4_full_dir: float
    t4_both_hat: float
    t4_both_dir: float
    t4_mix_hat: float
    t4_mix_dir: float
    t5_priv_hat: float
    t5_priv_dir: float
    t5_full_hat: float
    t5_full_dir: float
    t5_both_hat: float
    t5_both_dir: float
    t5_mix_hat: float
    t5_mix_dir: float


def _blocks(config: GaussConfig, params: HkParams, k: DerivedConstants) -> _Blocks:
    P = config.P
    a1, a2 = params.alpha1, params.alpha2
    g41, g42 = config.g41, config.g42
    g51, g52 = config.g51, config.g52
    e4 = 1 + params.sigma2 + k.b12 * a2 * P
    e5 = 1 + params.sigma2 + k.b21 * a1 * P
    d4 = g42**2 * a2 * P + 1
    d5 = g51**2 * a1 * P + 1
    return _Blocks(
        t4_priv_hat=cfn((k.b11 * a1 * P + k.a1**2 * a1 * a2 * P**2) / e4),
        t4_priv_dir=cfn(g41**2 * a1 * P / d4),
        t4_full_hat=cfn((k.b11 * P + k.a1**2 * a2 * P**2) / e4),
        t4_full_dir=cfn(g41**2 * P / d4),
        t4_both_hat=cfn((k.b12 * (1 - a2) * P + k.b11 * P + k.a1**2 * P**2) / e4),
        t4_both_dir=cfn((g41**2 * P + (1 - a2) * g42**2 * P) / d4),
        t4_mix_hat=cfn((k.b12 * (1 - a2) * P + k.b11 * a1 * P + k.a1**2 * a1 * P**2) / e4),
        t4_mix_dir=cfn((g41**2 * a1 * P + (1 - a2) * g42**2 * P) / d4),
        t5_priv_hat=cfn((k.b22 * a2 * P + k.a2**2 * a1 * a2 * P**2) / e5),
        t5_priv_dir=cfn(g52**2 * a2 * P / d5),
        t5_full_hat=cfn((k.b22 * P + k.a2**2 * a1 * P**2) / e5),
        t5_full_dir=cfn(g52**2 * P / d5),
        t5_both_hat=cfn((k.b21 * (1 - a1) * P + k.b22 * P + k.a2**2 * P**2) / e5),
        t5_both_dir=cfn((g52**2 * P + (1 - a1) * g51**2 * P) / d5),
        t5_mix_hat=cfn((k.b21 * (1 - a1) * P + k.b22 * a2 * P + k.a2**2 * a2 * P**2) / e5),
        t5_mix_dir=cfn((g52**2 * a2 * P + (1 - a1) * g51**2 * P) / d5),
    )


def _sum_rate_family(
    p_hat: float, p_dir: float, p_pen: float,
    q_hat: float, q_dir: float, q_pen: float,
    r0: float,
) -> tuple[float, float, float, float]:
    """Four cross sums of min{p_hat, p_dir - p_pen + r0} + min{q_hat, ...}."""
    return (
        p_hat + q_hat,
        p_dir - p_pen + q_dir - q_pen + 2 * r0,
        p_hat + q_dir - q_pen + r0,
        q_hat + p_dir - p_pen + r0,
    )


def _two_r1_plus_r2(blocks: _Blocks, c1: float, c2: float, r0: float) -> tuple[float, ...]:
    """The six printed 2*R1 + R2 bounds (not the full eight-term expansion)."""
    b = blocks
    return (
        b.t4_priv_hat + b.t4_both_hat + b.t5_mix_hat,
        b.t4_priv_dir + b.t4_both_dir + b.t5_mix_dir + 3 * r0 - 2 * c1 - c2,
        b.t4_priv_dir + b.t4_both_dir + b.t5_mix_hat + 2 * r0 - 2 * c1,
        b.t4_priv_hat + b.t4_both_hat + b.t5_mix_dir + r0 - c2,
        b.t4_priv_hat + b.t4_both_dir + b.t5_mix_dir + 2 * r0 - c1 - c2,
        b.t4_priv_hat + b.t4_both_dir + b.t5_mix_hat + r0 - c1,
    )


def swap_config(config: GaussConfig) -> GaussConfig:
    """Exchange the roles of the two source-destination pairs."""
    return GaussConfig(
        g31=config.g32,
        g32=config.g31,
        g41=config.g52,
        g42=config.g51,
        g51=config.g42,
        g52=config.g41,
        P=config.P,
        R0=config.R0,
    )


def swap_params(params: HkParams) -> HkParams:
    return HkParams(alpha1=params.alpha2, alpha2=params.alpha1, sigma2=params.sigma2)


def gauss_region(
    config: GaussConfig, params: HkParams, c_swap: str = "pattern"
) -> list[RateInequality]:
    """All 28 closed-form inequalities for one (config, params) point.

    ``c_swap`` selects the penalty attachment in the one sum-rate family
    whose printed double-R0 member carries c1 on the destination-5 term
    and c2 on the destination-4 term, against the pattern of every other
    bound.  ``pattern`` (default) keeps c1 with destination 4 and c2 with
    destination 5 throughout; ``verbatim`` honors the anomalous
    attachment and propagates it to that family's two single-R0 members
    (the double-R0 member itself has the same value either way, since it
    pays both penalties once).
    """
    if c_swap not in C_SWAP_MODES:
        raise SchemaError(f"c_swap must be one of {C_SWAP_MODES}, got {c_swap!r}")
    k = derived_constants(config, params)
    b = _blocks(config, params, k)
    r0 = config.R0

    bounds: list[RateInequality] = [
        RateInequality(1, 0, b.t4_full_hat, "R1 #1"),
        RateInequality(1, 0, b.t4_full_dir - k.c1 + r0, "R1 #2"),
        RateInequality(0, 1, b.t5_full_hat, "R2 #1"),
        RateInequality(0, 1, b.t5_full_dir - k.c2 + r0, "R2 #2"),
    ]

    families = [
        # (X1 private at 4 | both commons) + (X2 and common 1 at 5)
        (b.t4_priv_hat, b.t4_priv_dir, k.c1, b.t5_both_hat, b.t5_both_dir, k.c2),
        # (X2 private at 5 | both commons) + (X1 and common 2 at 4): the
        # contested family; pattern keeps c2 on the destination-5 terms.
        (b.t5_priv_hat, b.t5_priv_dir, k.c2, b.t4_both_hat, b.t4_both_dir, k.c1)
        if c_swap == "pattern"
        else (b.t5_priv_hat, b.t5_priv_dir, k.c1, b.t4_both_hat, b.t4_both_dir, k.c2),
        # (X1 private and common 2 at 4 | common 1) + mirror at 5
        (b.t4_mix_hat, b.t4_mix_dir, k.c1, b.t5_mix_hat, b.t5_mix_dir, k.c2),
    ]
    idx = 1
    for ph, pd, pp, qh, qd, qp in families:
        for rhs in _sum_rate_family(ph, pd, pp, qh, qd, qp, r0):
            bounds.append(RateInequality(1, 1, rhs, f"R1+R2 #{idx}"))
            idx += 1

    for i, rhs in enumerate(_two_r1_plus_r2(b, k.c1, k.c2, r0), start=1):
        bounds.append(RateInequality(2, 1, rhs, f"2R1+R2 #{i}"))

    # R1 + 2*R2: the same six bounds with the pair indices switched.
    sw_cfg, sw_par = swap_config(config), swap_params(params)
    sw_k = derived_constants(sw_cfg, sw_par)
    sw_b = _blocks(sw_cfg, sw_par, sw_k)
    for i, rhs in enumerate(_two_r1_plus_r2(sw_b, sw_k.c1, sw_k.c2, r0), start=1):
        bounds.append(RateInequality(1, 2, rhs, f"R1+2R2 #{i}"))

    return bounds


def sum_rate(config: GaussConfig, params: HkParams, c_swap: str = "pattern") -> float:
    """Best R1 + R2 of the 28-bound region; 0 when the region is empty."""
    region = RateRegion2D(gauss_region(config, params, c_swap))
    value, _ = max_weighted(region, 1.0, 1.0)
    return value


def _alpha_grid(step: float) -> list[float]:
    if not 0.0 < step <= 1.0:
        raise SchemaError(f"alpha step must lie in (0, 1], got {step}")
    n = int(round(1.0 / step))
    grid = [min(i * step, 1.0) for i in range(n)]
    grid.append(1.0)
    return grid


def optimize_sum_rate(
    config: GaussConfig,
    alpha_step: float,
    sigma_grid: Sequence[float],
    c_swap: str = "pattern",
) -> tuple[HkParams, float]:
    """Grid-maximize the sum rate over (alpha1, alpha2, sigma2).

    Scanning order is lexicographic in (alpha1, alpha2, sigma2) with
    strictly-greater replacement, so ties resolve toward the smallest
    triple and reruns are deterministic.
    """
    if not sigma_grid:
        raise SchemaError("sigma_grid must be non-empty")
    alphas = _alpha_grid(alpha_step)
    best_params = None
    best_value = -1.0
    for a1 in alphas:
        for a2 in alphas:
            for s2 in sigma_grid:
                params = HkParams(a1, a2, s2)
                value = sum_rate(config, params, c_swap)
                if value > best_value:
                    best_value = value
                    best_params = params
    return best_params, best_value


def baseline_ian(
    config: GaussConfig, sigma_grid: Sequence[float], c_swap: str = "pattern"
) -> float:
    """All power private: interference treated as noise.  Best over sigma2."""
    if not sigma_grid:
        raise SchemaError("sigma_grid must be non-empty")
    return max(sum_rate(config, HkParams(1.0, 1.0, s2), c_swap) for s2 in sigma_grid)


def baseline_snd(
    config: GaussConfig, sigma_grid: Sequence[float], c_swap: str = "pattern"
) -> float:
    """All power common: full simultaneous decoding.  Best over sigma2."""
    if not sigma_grid:
        raise SchemaError("sigma_grid must be non-empty")
    return max(sum_rate(config, HkParams(0.0, 0.0, s2), c_swap) for s2 in sigma_grid)
