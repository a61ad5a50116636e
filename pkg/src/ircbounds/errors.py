"""Exception types shared across the package.

Two failure classes are distinguished because the command line maps them to
different exit codes: structural problems in user-supplied data (bad shapes,
unknown variable names, dangling references) versus violated numeric
contracts (masses that do not normalize, regions left unbounded).
"""


class SchemaError(ValueError):
    """Malformed structure: unknown names, wrong shapes, dangling references."""


class InvariantError(ValueError):
    """Violated numeric contract: non-normalized pmf, negative mass, unbounded region."""
