"""Python access to the augvar C++ library.

Results come back as plain dicts and lists decoded from the library's JSON.
"""

import json
import os
import sys

try:
    from . import _augvar
except ImportError:  # in-tree build: the extension sits in the CMake build directory
    _dir = os.environ.get("AUGVAR_EXTENSION_DIR")
    if not _dir:
        raise
    sys.path.insert(0, _dir)
    import _augvar  # noqa: E402

AugvarError = _augvar.AugvarError


def run(subcommand, inputs=(), **options):
    """Runs a CLI subcommand in-process; returns (exit_code, report dict)."""
    code, report = _augvar.run(subcommand, list(inputs), as_json=True, **options)
    return code, json.loads(report)


def clifford_relation(n, signs):
    return json.loads(_augvar.clifford_relation(n, list(signs)))


def solve_formal(relation, var="", order=16):
    return json.loads(_augvar.solve_formal(json.dumps(relation), var, order))


def newton_invariants(relation):
    return json.loads(_augvar.newton_invariants(json.dumps(relation)))


def certify_irreducible(relation):
    return json.loads(_augvar.certify_irreducible(json.dumps(relation)))


def markov(bound):
    return [tuple(t) for t in _augvar.markov(bound)]


def cover_contribution(d):
    return _augvar.cover_contribution(d)


def multicover_matches_log(m, order):
    return _augvar.multicover_matches_log(m, order)


__all__ = [
    "AugvarError",
    "run",
    "clifford_relation",
    "solve_formal",
    "newton_invariants",
    "certify_irreducible",
    "markov",
    "cover_contribution",
    "multicover_matches_log",
]
