"""Numerical toolkit for achievable-rate regions of two interfering
transmitter-receiver pairs assisted by compress-and-forward relays.

Layers:

* :mod:`ircbounds.joint`   - exact discrete probability (entropies, mutual
  information) over named finite variables.
* :mod:`ircbounds.regions` - two-dimensional rate-region geometry.
* :mod:`ircbounds.dm`      - the discrete-memoryless bound evaluator for any
  number of relays, plus an independently transcribed single-relay form.
* :mod:`ircbounds.det`     - the injective-deterministic channel class whose
  region is exactly characterized.
* :mod:`ircbounds.gauss`   - closed-form scalar bounds, power-split
  optimization and baseline strategies.
* :mod:`ircbounds.verify`  - self-contained cross-check suites.
* :mod:`ircbounds.cli`     - the ``ircbounds`` command line.
"""
from .det import (
    DetInput,
    DetValidationReport,
    InjectiveDetSpec,
    det_joint,
    specialization_check,
    theorem2_region,
    validate,
)
from .dm import (
    ImrcChannel,
    ImrcInputSpec,
    corollary1_region,
    full_joint,
    hybrid_term,
    theorem1_region,
)
from .errors import InvariantError, SchemaError
from .gauss import (
    GaussConfig,
    HkParams,
    baseline_ian,
    baseline_snd,
    cfn,
    derived_constants,
    gauss_region,
    optimize_sum_rate,
    sum_rate,
)
from .joint import ConditionalFactor, NamedJoint, build_joint, deterministic_factor
from .regions import (
    Polygon2D,
    RateInequality,
    RateRegion2D,
    frontier,
    hull_union,
    max_weighted,
)

__version__ = "0.1.0"

__all__ = [
    "ConditionalFactor",
    "DetInput",
    "DetValidationReport",
    "GaussConfig",
    "HkParams",
    "ImrcChannel",
    "ImrcInputSpec",
    "InjectiveDetSpec",
    "InvariantError",
    "NamedJoint",
    "Polygon2D",
    "RateInequality",
    "RateRegion2D",
    "SchemaError",
    "baseline_ian",
    "baseline_snd",
    "build_joint",
    "cfn",
    "corollary1_region",
    "derived_constants",
    "det_joint",
    "deterministic_factor",
    "frontier",
    "full_joint",
    "gauss_region",
    "hull_union",
    "hybrid_term",
    "max_weighted",
    "optimize_sum_rate",
    "specialization_check",
    "sum_rate",
    "theorem1_region",
    "theorem2_region",
    "validate",
]
