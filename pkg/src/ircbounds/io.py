"""JSON loaders for channel, input, deterministic-spec and sweep files.

Every loader validates shape and naming before touching numerics and
raises ``SchemaError`` with the offending field path, so the command line
can report precise locations.  Normalization problems surface later as
``InvariantError`` when tables are wrapped into factors.
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from typing import Any

import numpy as np

from .det import DetInput, InjectiveDetSpec
from .dm import ImrcChannel, ImrcInputSpec, x3_name, y3_name, yh3_name
from .errors import SchemaError
from .gauss import GaussConfig, HkParams
from .joint import ConditionalFactor

GAIN_KEYS = ("g31", "g32", "g41", "g42", "g51", "g52")


def load_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON ({exc})") from exc


def _require(doc: dict, key: str, where: str) -> Any:
    if not isinstance(doc, dict):
        raise SchemaError(f"{where}: expected an object")
    if key not in doc:
        raise SchemaError(f"{where}: missing required field {key!r}")
    return doc[key]


def _number(value: Any, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(f"{where}: expected a number, got {type(value).__name__}")
    if not math.isfinite(float(value)):
        raise SchemaError(f"{where}: must be finite")
    return float(value)


def _array(value: Any, where: str) -> np.ndarray:
    try:
        arr = np.asarray(value, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"{where}: not a rectangular numeric array ({exc})") from exc
    if arr.dtype != np.float64 or arr.size == 0:
        raise SchemaError(f"{where}: not a non-empty numeric array")
    if not np.all(np.isfinite(arr)):
        raise SchemaError(f"{where}: contains non-finite entries")
    return arr


def _int_array(value: Any, where: str) -> np.ndarray:
    try:
        arr = np.asarray(value)
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"{where}: not a rectangular array ({exc})") from exc
    if arr.size == 0 or not np.issubdtype(arr.dtype, np.integer):
        raise SchemaError(f"{where}: expected a non-empty integer array")
    return arr.astype(np.int64)


def _variables(doc: Any, where: str) -> dict[str, int]:
    if not isinstance(doc, list) or not doc:
        raise SchemaError(f"{where}: expected a non-empty list of [name, size] pairs")
    out: dict[str, int] = {}
    for i, item in enumerate(doc):
        if (
            not isinstance(item, (list, tuple))
            or len(item) != 2
            or not isinstance(item[0], str)
            or isinstance(item[1], bool)
            or not isinstance(item[1], int)
            or item[1] < 1
        ):
            raise SchemaError(f"{where}[{i}]: expected [name, positive size]")
        if item[0] in out:
            raise SchemaError(f"{where}[{i}]: duplicate variable {item[0]!r}")
        out[item[0]] = item[1]
    return out


def _factor(doc: Any, sizes: dict[str, int], where: str) -> ConditionalFactor:
    given = _require(doc, "given", where)
    output = _require(doc, "output", where)
    table = _array(_require(doc, "table", where), f"{where}.table")
    for field, names in (("given", given), ("output", output)):
        if not isinstance(names, list) or not all(isinstance(n, str) for n in names):
            raise SchemaError(f"{where}.{field}: expected a list of variable names")
        for n in names:
            if n not in sizes:
                raise SchemaError(f"{where}.{field}: unknown variable {n!r}")
    want = tuple(sizes[n] for n in given) + tuple(sizes[n] for n in output)
    if table.shape != want:
        raise SchemaError(
            f"{where}.table: shape {table.shape} does not match declared sizes {want}"
        )
    return ConditionalFactor(tuple(output), tuple(given), table)


# -- channel files ----------------------------------------------------------

def load_channel(path: str) -> ImrcChannel:
    """Channel file: {"variables": [[name, size], ...], "law": {given, output, table}}."""
    doc = load_json(path)
    sizes = _variables(_require(doc, "variables", path), f"{path}: variables")
    relay_ids = sorted(
        int(m.group(1)) for name in sizes if (m := re.fullmatch(r"X3_(\d+)", name))
    )
    n = len(relay_ids)
    if n == 0 or relay_ids != list(range(1, n + 1)):
        raise SchemaError(f"{path}: variables must declare X3_1..X3_N contiguously")
    needed = ["X1", "X2", "Y4", "Y5"]
    needed += [x3_name(k) for k in range(1, n + 1)]
    needed += [y3_name(k) for k in range(1, n + 1)]
    for name in needed:
        if name not in sizes:
            raise SchemaError(f"{path}: variables: missing {name!r}")
    extra = set(sizes) - set(needed)
    if extra:
        raise SchemaError(f"{path}: variables: unexpected names {sorted(extra)}")
    law = _factor(_require(doc, "law", path), sizes, f"{path}: law")
    return ImrcChannel(
        relays=n,
        x1_size=sizes["X1"],
        x2_size=sizes["X2"],
        x3_sizes=tuple(sizes[x3_name(k)] for k in range(1, n + 1)),
        y3_sizes=tuple(sizes[y3_name(k)] for k in range(1, n + 1)),
        y4_size=sizes["Y4"],
        y5_size=sizes["Y5"],
        law=law,
    )


def load_imrc_input(path: str, channel: ImrcChannel) -> ImrcInputSpec:
    """Input file: the factored source/relay/compression distribution.

    {"variables": [...], "factors": [{given, output, table}, ...]} where the
    factor list must carry exactly the scheme's factorization: p(Q),
    p(U1,X1|Q), p(U2,X2|Q), p(X3_k|Q), p(Yh3_k|Y3_k,X3_k,Q).
    """
    doc = load_json(path)
    n = channel.relays
    sizes = _variables(_require(doc, "variables", path), f"{path}: variables")
    # Channel-owned alphabets participate in factor shapes.
    for name, size in (
        ("X1", channel.x1_size),
        ("X2", channel.x2_size),
        ("Y4", channel.y4_size),
        ("Y5", channel.y5_size),
        *((x3_name(k + 1), channel.x3_sizes[k]) for k in range(n)),
        *((y3_name(k + 1), channel.y3_sizes[k]) for k in range(n)),
    ):
        if name in sizes and sizes[name] != size:
            raise SchemaError(f"{path}: variables: |{name}| = {sizes[name]} but channel has {size}")
        sizes.setdefault(name, size)
    for name in ("Q", "U1", "U2", *(yh3_name(k) for k in range(1, n + 1))):
        if name not in sizes:
            raise SchemaError(f"{path}: variables: missing {name!r}")

    factors_doc = _require(doc, "factors", path)
    if not isinstance(factors_doc, list):
        raise SchemaError(f"{path}: factors: expected a list")
    factors = [
        _factor(f, sizes, f"{path}: factors[{i}]") for i, f in enumerate(factors_doc)
    ]
    want_scopes = [((), ("Q",)), (("Q",), ("U1", "X1")), (("Q",), ("U2", "X2"))]
    want_scopes += [(("Q",), (x3_name(k),)) for k in range(1, n + 1)]
    want_scopes += [
        ((y3_name(k), x3_name(k), "Q"), (yh3_name(k),)) for k in range(1, n + 1)
    ]
    got_scopes = [(f.given, f.outputs) for f in factors]
    if got_scopes != want_scopes:
        raise SchemaError(
            f"{path}: factors: malformed factorization; expected factor scopes "
            f"{want_scopes}, got {got_scopes}"
        )
    by_output = {f.outputs: f for f in factors}
    return ImrcInputSpec(
        p_q=by_output[("Q",)].table,
        p_u1x1=by_output[("U1", "X1")].table,
        p_u2x2=by_output[("U2", "X2")].table,
        p_x3=tuple(by_output[(x3_name(k),)].table for k in range(1, n + 1)),
        p_yh3=tuple(by_output[(yh3_name(k),)].table for k in range(1, n + 1)),
    )


# -- deterministic class files ------------------------------------------------

def load_det_spec(path: str) -> InjectiveDetSpec:
    """Deterministic spec file: explicit map arrays plus x3_size and r0."""
    doc = load_json(path)
    t1 = _int_array(_require(doc, "t1", path), f"{path}: t1")
    t2 = _int_array(_require(doc, "t2", path), f"{path}: t2")
    y4 = _int_array(_require(doc, "y4", path), f"{path}: y4")
    y5 = _int_array(_require(doc, "y5", path), f"{path}: y5")
    y3 = _int_array(_require(doc, "y3", path), f"{path}: y3")
    x3_size = _require(doc, "x3_size", path)
    if isinstance(x3_size, bool) or not isinstance(x3_size, int) or x3_size < 1:
        raise SchemaError(f"{path}: x3_size: expected a positive integer")
    r0 = _number(_require(doc, "r0", path), f"{path}: r0")
    try:
        return InjectiveDetSpec(t1=t1, t2=t2, y4=y4, y5=y5, y3=y3, x3_size=x3_size, r0=r0)
    except SchemaError as exc:
        raise SchemaError(f"{path}: {exc}") from exc


def load_det_input(path: str, spec: InjectiveDetSpec) -> DetInput:
    """Deterministic input file: {"q": [...], "x1": [[...]], "x2": [[...]]}."""
    doc = load_json(path)
    p_q = _array(_require(doc, "q", path), f"{path}: q")
    p_x1 = _array(_require(doc, "x1", path), f"{path}: x1")
    p_x2 = _array(_require(doc, "x2", path), f"{path}: x2")
    if p_q.ndim != 1:
        raise SchemaError(f"{path}: q: expected a vector")
    q = p_q.shape[0]
    if p_x1.shape != (q, spec.x1_size):
        raise SchemaError(f"{path}: x1: expected shape {(q, spec.x1_size)}, got {p_x1.shape}")
    if p_x2.shape != (q, spec.x2_size):
        raise SchemaError(f"{path}: x2: expected shape {(q, spec.x2_size)}, got {p_x2.shape}")
    return DetInput(p_q=p_q, p_x1=p_x1, p_x2=p_x2)


# -- Gaussian files -----------------------------------------------------------

def load_gauss_config(path: str) -> tuple[GaussConfig, HkParams]:
    """Point-evaluation file: gains, P, R0 plus alpha1/alpha2/sigma2."""
    doc = load_json(path)
    gains = {k: _number(_require(doc, k, path), f"{path}: {k}") for k in GAIN_KEYS}
    config = GaussConfig(
        **gains,
        P=_number(_require(doc, "P", path), f"{path}: P"),
        R0=_number(_require(doc, "R0", path), f"{path}: R0"),
    )
    params = HkParams(
        alpha1=_number(_require(doc, "alpha1", path), f"{path}: alpha1"),
        alpha2=_number(_require(doc, "alpha2", path), f"{path}: alpha2"),
        sigma2=_number(_require(doc, "sigma2", path), f"{path}: sigma2"),
    )
    return config, params


@dataclass(frozen=True)
class SweepSpec:
    """One-dimensional sweep: vary P or R0, optimize the split per point."""

    x: str                       # "P" or "R0"
    grid: tuple[float, ...]
    gains: dict[str, float]
    P: float                     # fixed power when x == "R0"
    R0: float                    # fixed link rate when x == "P"
    alpha_step: float
    sigma_grid: tuple[float, ...]

    def config_at(self, value: float) -> GaussConfig:
        p = value if self.x == "P" else self.P
        r0 = value if self.x == "R0" else self.R0
        return GaussConfig(**self.gains, P=p, R0=r0)


def _grid(doc: Any, where: str) -> tuple[float, ...]:
    if isinstance(doc, list):
        values = tuple(_number(v, f"{where}[{i}]") for i, v in enumerate(doc))
        if not values:
            raise SchemaError(f"{where}: empty grid")
        return values
    start = _number(_require(doc, "start", where), f"{where}.start")
    stop = _number(_require(doc, "stop", where), f"{where}.stop")
    points = _require(doc, "points", where)
    if isinstance(points, bool) or not isinstance(points, int) or points < 1:
        raise SchemaError(f"{where}.points: expected a positive integer")
    spacing = doc.get("spacing", "linear")
    if spacing not in ("linear", "log"):
        raise SchemaError(f"{where}.spacing: expected 'linear' or 'log'")
    if points == 1:
        return (start,)
    if spacing == "log":
        if start <= 0 or stop <= 0:
            raise SchemaError(f"{where}: log spacing needs positive endpoints")
        ratio = (stop / start) ** (1.0 / (points - 1))
        return tuple(start * ratio**i for i in range(points))
    step = (stop - start) / (points - 1)
    return tuple(start + step * i for i in range(points))


def load_sweep(path: str) -> SweepSpec:
    doc = load_json(path)
    x = _require(doc, "x", path)
    if x not in ("P", "R0"):
        raise SchemaError(f"{path}: x: expected 'P' or 'R0', got {x!r}")
    grid = _grid(_require(doc, "grid", path), f"{path}: grid")
    gains = {k: _number(_require(doc, k, path), f"{path}: {k}") for k in GAIN_KEYS}
    alpha_step = _number(doc.get("alpha_step", 0.02), f"{path}: alpha_step")
    sigma_doc = doc.get("sigma2", 5.0)
    if isinstance(sigma_doc, dict):
        sigma_grid = _grid(_require(sigma_doc, "grid", f"{path}: sigma2"), f"{path}: sigma2.grid")
    else:
        sigma_grid = (_number(sigma_doc, f"{path}: sigma2"),)
    if any(s <= 0 for s in sigma_grid):
        raise SchemaError(f"{path}: sigma2: entries must be positive")
    fixed_p = _number(doc.get("P", 10.0), f"{path}: P")
    fixed_r0 = _number(doc.get("R0", 0.0), f"{path}: R0")
    if x == "P" and any(v <= 0 for v in grid):
        raise SchemaError(f"{path}: grid: P values must be positive")
    if x == "R0" and any(v < 0 for v in grid):
        raise SchemaError(f"{path}: grid: R0 values must be >= 0")
    spec = SweepSpec(
        x=x,
        grid=grid,
        gains=gains,
        P=fixed_p,
        R0=fixed_r0,
        alpha_step=alpha_step,
        sigma_grid=sigma_grid,
    )
    # Fail fast on bad fixed values.
    spec.config_at(grid[0])
    return spec
