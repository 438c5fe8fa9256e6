"""Exact symbolic engine for the two-parameter deformed exterior plane.

Thin wrapper over the compiled core: string-in/string-out for expression
operations, dicts for the verification reports.
"""

import json as _json
import sys as _sys

from qexplane._core import (  # noqa: F401
    derivative,
    exterior_d,
    normalize,
    parse_roundtrip,
    run_command,
)
from qexplane import _core


def solve_ansatz():
    return _json.loads(_core.solve_ansatz_json())


def consistency(calculus, flipped_sign=False):
    return _json.loads(_core.consistency_json(calculus, flipped_sign))


def confluence(calculus, flipped_sign=False):
    return _json.loads(_core.confluence_json(calculus, flipped_sign))


def ybe(calculus):
    return _json.loads(_core.ybe_json(calculus))


def rcheck(calculus):
    return _json.loads(_core.rcheck_json(calculus))


def rtt(calculus):
    return _json.loads(_core.rtt_json(calculus))


def covariance(calculus, commutative_control=False):
    return _json.loads(_core.covariance_json(calculus, commutative_control))


def fock(calculus, q):
    return _json.loads(_core.fock_json(calculus, complex(q)))


def verify_all(seed=0):
    return _json.loads(_core.verify_all_json(seed))


def main():
    """Console entry point: dispatch to the CLI."""
    raise SystemExit(run_command(_sys.argv[1:]))
