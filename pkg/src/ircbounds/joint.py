"""Exact discrete probability over named finite alphabets.

A joint distribution is a dense numpy tensor with one axis per named
variable.  Conditional factors are dense tensors whose leading axes range
over the conditioning variables and whose trailing axes range over the
produced variables.  ``build_joint`` multiplies a chain of factors into a
single joint, checking that every factor conditions only on variables
produced earlier in the chain.

All information quantities are in bits (log base 2) with the usual
``0 * log 0 = 0`` convention.  Entropies and mutual informations are
computed by marginalizing the full table, so repeated evaluation of the
same expression is bit-identical.
"""
from __future__ import annotations

import string
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InvariantError, SchemaError

# Tolerance for accepting a pmf as normalized before the single renormalization.
PMF_TOL = 1e-12
# Clamp window for tiny negative entropies / mutual informations caused by
# floating point cancellation.  Anything below this is treated as a bug.
NEG_TOL = 1e-12
# Refuse to materialize joints above this many entries.
MAX_JOINT_ENTRIES = 10**8


def _clamp_nonneg(value: float, what: str) -> float:
    if value >= 0.0:
        return value
    if value >= -NEG_TOL:
        return 0.0
    raise InvariantError(f"{what} evaluated to {value}, below the -{NEG_TOL:g} clamp window")


def _entropy_of_table(table: np.ndarray) -> float:
    """Shannon entropy in bits of a (sub)normalized dense pmf table."""
    flat = table.reshape(-1)
    pos = flat[flat > 0.0]
    if pos.size == 0:
        return 0.0
    return float(-(pos * np.log2(pos)).sum())


@dataclass(frozen=True)
class NamedJoint:
    """A joint pmf over an ordered tuple of named finite variables.

    ``variables`` pairs each name with its alphabet size, in axis order.
    The table is validated on construction: entries must be nonnegative
    (within ``PMF_TOL``) and sum to 1 within ``PMF_TOL``; it is then
    renormalized exactly once so downstream arithmetic starts from total
    mass 1.
    """

    variables: tuple[tuple[str, int], ...]
    table: np.ndarray

    def __post_init__(self) -> None:
        names = [name for name, _ in self.variables]
        if len(set(names)) != len(names):
            raise SchemaError(f"duplicate variable names in joint: {names}")
        sizes = tuple(int(size) for _, size in self.variables)
        if any(size < 1 for size in sizes):
            raise SchemaError(f"alphabet sizes must be >= 1, got {sizes}")
        n_entries = 1
        for size in sizes:
            n_entries *= size
        if n_entries > MAX_JOINT_ENTRIES:
            raise InvariantError(
                f"joint would hold {n_entries} entries, above the {MAX_JOINT_ENTRIES} cap"
            )
        table = np.asarray(self.table, dtype=np.float64)
        if table.shape != sizes:
            raise SchemaError(f"table shape {table.shape} does not match alphabets {sizes}")
        lowest = float(table.min()) if table.size else 0.0
        if lowest < -PMF_TOL:
            raise InvariantError(f"joint table has negative entry {lowest}")
        if lowest < 0.0:
            table = np.maximum(table, 0.0)
        total = float(table.sum())
        if abs(total - 1.0) > PMF_TOL:
            raise InvariantError(f"joint table sums to {total!r}, not 1 within {PMF_TOL:g}")
        object.__setattr__(self, "table", table / total)
        object.__setattr__(self, "variables", tuple(zip(names, sizes)))

    # -- structure helpers -------------------------------------------------

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.variables)

    def size_of(self, name: str) -> int:
        for var, size in self.variables:
            if var == name:
                return size
        raise SchemaError(f"unknown variable {name!r}; joint has {self.names}")

    def _axes_of(self, names: Iterable[str]) -> tuple[int, ...]:
        order = {name: axis for axis, (name, _) in enumerate(self.variables)}
        axes = []
        for name in names:
            if name not in order:
                raise SchemaError(f"unknown variable {name!r}; joint has {self.names}")
            axes.append(order[name])
        return tuple(sorted(set(axes)))

    def _marginal_table(self, names: Iterable[str]) -> np.ndarray:
        """Dense marginal over ``names`` (canonical axis order), unvalidated."""
        keep = self._axes_of(names)
        drop = tuple(axis for axis in range(len(self.variables)) if axis not in keep)
        return self.table.sum(axis=drop) if drop else self.table

    # -- operations ---------------------------------------------------------

    def marginalize(self, keep: Iterable[str]) -> "NamedJoint":
        """Marginal joint over ``keep``, preserving the original axis order."""
        axes = self._axes_of(keep)
        variables = tuple(self.variables[axis] for axis in axes)
        return NamedJoint(variables, self._marginal_table([n for n, _ in variables]))

    def entropy(self, of: Iterable[str]) -> float:
        """H(of) in bits."""
        return _entropy_of_table(self._marginal_table(of))

    def cond_entropy(self, a: Iterable[str], c: Iterable[str] = ()) -> float:
        """H(A | C) in bits, as H(A, C) - H(C)."""
        a = tuple(a)
        c = tuple(c)
        if set(a) & set(c):
            raise SchemaError(f"conditional entropy arguments overlap: {set(a) & set(c)}")
        if not a:
            return 0.0
        h_ac = self.entropy(a + c)
        h_c = self.entropy(c) if c else 0.0
        return _clamp_nonneg(h_ac - h_c, f"H({a}|{c})")

    def mutual_info(self, a: Iterable[str], b: Iterable[str], c: Iterable[str] = ()) -> float:
        """I(A ; B | C) in bits, as H(A|C) - H(A|B,C)."""
        a = tuple(a)
        b = tuple(b)
        c = tuple(c)
        for left, right in ((a, b), (a, c), (b, c)):
            if set(left) & set(right):
                raise SchemaError(f"mutual information arguments overlap: {set(left) & set(right)}")
        if not a or not b:
            return 0.0
        # Expanded into four entropies so both orders reduce over identical
        # marginal tables and symmetry holds to float precision.
        h_ac = self.entropy(a + c)
        h_bc = self.entropy(b + c)
        h_abc = self.entropy(a + b + c)
        h_c = self.entropy(c) if c else 0.0
        return _clamp_nonneg(h_ac + h_bc - h_abc - h_c, f"I({a};{b}|{c})")


@dataclass(frozen=True)
class ConditionalFactor:
    """A conditional pmf  p(outputs | given).

    The table's leading axes range over ``given`` (in declared order) and
    its trailing axes over ``outputs``.  Every conditional slice must sum
    to 1 within ``PMF_TOL``; slices are renormalized exactly once.
    """

    outputs: tuple[str, ...]
    given: tuple[str, ...]
    table: np.ndarray

    def __post_init__(self) -> None:
        outputs = tuple(self.outputs)
        given = tuple(self.given)
        if not outputs:
            raise SchemaError("factor must produce at least one variable")
        scope = outputs + given
        if len(set(scope)) != len(scope):
            raise SchemaError(f"factor scope has repeated names: {scope}")
        table = np.asarray(self.table, dtype=np.float64)
        if table.ndim != len(scope):
            raise SchemaError(
                f"factor over {scope} needs a {len(scope)}-d table, got {table.ndim}-d"
            )
        lowest = float(table.min()) if table.size else 0.0
        if lowest < -PMF_TOL:
            raise InvariantError(f"factor p({outputs}|{given}) has negative entry {lowest}")
        if lowest < 0.0:
            table = np.maximum(table, 0.0)
        out_axes = tuple(range(len(given), len(scope)))
        sums = table.sum(axis=out_axes)
        if not np.all(np.abs(sums - 1.0) <= PMF_TOL):
            worst = float(np.abs(sums - 1.0).max())
            raise InvariantError(
                f"factor p({outputs}|{given}) slices deviate from 1 by up to {worst:g}"
            )
        table = table / sums.reshape(sums.shape + (1,) * len(outputs))
        object.__setattr__(self, "outputs", outputs)
        object.__setattr__(self, "given", given)
        object.__setattr__(self, "table", table)

    @property
    def given_sizes(self) -> tuple[int, ...]:
        return self.table.shape[: len(self.given)]

    @property
    def output_sizes(self) -> tuple[int, ...]:
        return self.table.shape[len(self.given) :]


def build_joint(factors: Sequence[ConditionalFactor]) -> NamedJoint:
    """Multiply a factor chain into one dense joint.

    Factors are consumed in order; each may condition only on variables
    produced by earlier factors, and may not re-produce an existing one.
    The resulting variable order is the order of first production.
    """
    letters = string.ascii_letters
    axis_letter: dict[str, str] = {}
    variables: list[tuple[str, int]] = []
    sizes: dict[str, int] = {}

    total = 1
    for factor in factors:
        for name, size in zip(factor.outputs, factor.output_sizes):
            total *= size
    if total > MAX_JOINT_ENTRIES:
        raise InvariantError(f"joint would hold {total} entries, above the {MAX_JOINT_ENTRIES} cap")

    table = np.float64(1.0)
    current_subs = ""
    for factor in factors:
        for name, size in zip(factor.given, factor.given_sizes):
            if name not in sizes:
                raise SchemaError(
                    f"factor p({factor.outputs}|{factor.given}) conditions on {name!r} "
                    "before any factor produces it"
                )
            if sizes[name] != size:
                raise SchemaError(
                    f"factor p({factor.outputs}|{factor.given}) expects |{name}| = {size}, "
                    f"earlier factors set {sizes[name]}"
                )
        for name in factor.outputs:
            if name in sizes:
                raise SchemaError(f"variable {name!r} produced twice")
        for name, size in zip(factor.outputs, factor.output_sizes):
            if len(axis_letter) >= len(letters):
                raise InvariantError("too many variables for einsum contraction")
            axis_letter[name] = letters[len(axis_letter)]
            variables.append((name, size))
            sizes[name] = size
        factor_subs = "".join(axis_letter[n] for n in factor.given + factor.outputs)
        new_subs = current_subs + "".join(axis_letter[n] for n in factor.outputs)
        table = np.einsum(f"{current_subs},{factor_subs}->{new_subs}", table, factor.table)
        current_subs = new_subs

    if not variables:
        raise SchemaError("build_joint needs at least one factor")
    return NamedJoint(tuple(variables), table)


def deterministic_factor(
    outputs: Sequence[tuple[str, int]],
    given: Sequence[tuple[str, int]],
    fn,
) -> ConditionalFactor:
    """Point-mass conditional factor from an explicit map.

    ``fn`` receives one index per ``given`` variable and must return a tuple
    of output indices (or a bare index when there is a single output).
    """
    given_names = tuple(name for name, _ in given)
    given_sizes = tuple(size for _, size in given)
    out_names = tuple(name for name, _ in outputs)
    out_sizes = tuple(size for _, size in outputs)
    table = np.zeros(given_sizes + out_sizes, dtype=np.float64)
    for idx in np.ndindex(*given_sizes) if given_sizes else [()]:
        value = fn(*idx)
        if not isinstance(value, tuple):
            value = (value,)
        if len(value) != len(out_sizes):
            raise SchemaError(f"map returned {len(value)} outputs, factor declares {len(out_sizes)}")
        for v, size, name in zip(value, out_sizes, out_names):
            if not 0 <= v < size:
                raise SchemaError(f"map value {v} out of range for {name!r} (size {size})")
        table[idx + tuple(value)] = 1.0
    return ConditionalFactor(out_names, given_names, table)
