"""Exact generalized first Tits constructions J(A, mu) over Q and F_p.

The compiled core exposes a JSON-in / JSON-out surface mirroring the CLI:
build algebras from spec dictionaries, evaluate the construction's maps,
run identity suites, compute nuclei, and scan finite cases exhaustively.
"""

import json as _json

from ._core import (
    TitsForgeError,
    compare_cyclic,
    nucleus,
    registry_ids,
    run_suite,
    scan,
    tits_eval,
    validate_algebra,
)

__all__ = [
    "TitsForgeError",
    "compare_cyclic",
    "nucleus",
    "registry_ids",
    "run_suite",
    "scan",
    "tits_eval",
    "validate_algebra",
    "verify",
]


def verify(spec, ids="", samples=500, seed=0):
    """Run identity checks and return the report as a dictionary.

    ``spec`` may be a dict or a JSON string; ``ids`` a comma-separated string
    or an iterable of registry ids (empty means every identity that applies).
    """
    if not isinstance(spec, str):
        spec = _json.dumps(spec)
    if not isinstance(ids, str):
        ids = ",".join(ids)
    return _json.loads(run_suite(spec, ids, samples, seed))
