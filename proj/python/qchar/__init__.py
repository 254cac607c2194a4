"""Graded characters of KR-module fusion products for sl(r+1)."""

import json

from ._core import IdentityViolation, InvalidArgument, suite_names
from . import _core

__all__ = ["character", "verify", "suite_names", "IdentityViolation", "InvalidArgument"]


def character(rank, n, level=1):
    """Schur expansion and multiplicities of the graded character.

    n is "1,0;0,1" style text or a list of levels, each a list over alpha.
    Coefficients are lists of [q exponent, integer] pairs.
    """
    if not isinstance(n, str):
        n = ";".join(",".join(str(x) for x in row) for row in n)
        level = n.count(";") + 1
    return json.loads(_core.character_json(rank, level, n))


def verify(suite, rank=0, bound=0, order=20):
    """Run a verification suite; rank and bound 0 mean the suite defaults."""
    return json.loads(_core.verify_json(suite, rank, bound, order))
