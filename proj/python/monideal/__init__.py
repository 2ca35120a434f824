"""Square-free monomial ideals: powers, associated primes, packing and NTF checks.

Algebraic operations return :class:`Ideal` objects. Reports (``polarize``,
``ntf``, ``analyze``) return plain dicts shaped like the ``result`` member of
the command-line tool's ``--json`` output.
"""

import json as _json

from ._core import (
    SCHEMA_VERSION,
    ExponentOverflowError,
    Budget,
    Ideal,
    ParseError,
    ResourceError,
    UsageError,
    associated_primes,
    colon,
    konig,
    minimal_primes,
    packing,
    power,
    radical,
    symbolic_power,
)
from . import _core

__all__ = [
    "SCHEMA_VERSION", "ExponentOverflowError", "Budget", "Ideal", "ParseError", "ResourceError", "UsageError",
    "analyze", "associated_primes", "colon", "envelope", "konig", "minimal_primes", "ntf", "packing",
    "polarize", "power", "radical", "symbolic_power",
]


def polarize(ideal, t=1, budget=None):
    """Polarization of ideal**t and how its minimal primes map onto Ass(R/I^t)."""
    return _json.loads(_core._polarize(ideal, t, budget or Budget()))


def ntf(ideal, bound=None, rule="half", budget=None):
    """Ass(R/I^t) and embedded primes for t up to ``bound`` (default from ``rule``)."""
    return _json.loads(_core._ntf(ideal, bound, rule, budget or Budget()))


def analyze(ideal, bound=None, rule="half", budget=None):
    """Full report: invariants, NTF scan, minors and every theorem check."""
    return _json.loads(_core._analyze(ideal, bound, rule, budget or Budget()))


def envelope(command, ideal, result):
    """Wraps a result the way ``monideal --json <command>`` prints it."""
    return _json.loads(_core._envelope(command, ideal, _json.dumps(result)))
