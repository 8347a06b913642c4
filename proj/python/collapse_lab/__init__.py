"""Binomial complexities, balance and reconstruction of infinite words.

Specs are JSON documents (or dicts) in the same format the CLI reads, e.g.
``{"kind": "fibonacci"}``.
"""

import json

from . import _core
from ._core import (
    DegenerateTrajectory,
    DomainError,
    GeneratorError,
    InconsistentProjectionFamily,
    SpecParseError,
    binomial,
    find_collisions,
    k_binomial_equivalent,
    reconstruct,
    scenarios,
)

__version__ = _core.__version__

__all__ = [
    "DegenerateTrajectory",
    "DomainError",
    "GeneratorError",
    "InconsistentProjectionFamily",
    "SpecParseError",
    "binomial",
    "complexity",
    "find_collisions",
    "k_binomial_equivalent",
    "prefix",
    "reconstruct",
    "scenarios",
    "spec_hash",
    "verify",
]


def _spec_text(spec):
    return spec if isinstance(spec, str) else json.dumps(spec)


def prefix(spec, length):
    """First ``length`` letters of the described word, as a string."""
    return _core.prefix(_spec_text(spec), length)


def spec_hash(spec):
    return _core.spec_hash(_spec_text(spec))


def complexity(spec, length, n_max, orders=(2,), witnesses=False):
    """Complexity report document (the CLI's JSON output) as a dict."""
    return json.loads(_core.complexity(_spec_text(spec), length, n_max, list(orders), witnesses))


def verify(scenario):
    """Run a registered scenario and return its report as a dict."""
    return json.loads(_core.verify(scenario))
