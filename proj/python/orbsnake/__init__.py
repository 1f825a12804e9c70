"""Expansions of curves on orbifolds by snake graphs and matrix products."""

import json as _json

from . import _core
from ._core import DATA_DIR, InputError, cheb_u, cheb_u_value, expand_file, universal_poset_dot, verify

__all__ = [
    "DATA_DIR",
    "InputError",
    "cheb_u",
    "cheb_u_value",
    "chi",
    "expand",
    "expand_file",
    "lift",
    "matching_count",
    "mutate",
    "universal_poset_dot",
    "verify",
]


def _text(obj):
    return obj if isinstance(obj, str) else _json.dumps(obj)


def expand(curve, triangulation, format="canonical"):
    """Expansion of a curve descriptor; both arguments are dicts or JSON strings."""
    return _core.expand(_text(curve), _text(triangulation), format)


def chi(curve, triangulation, format="canonical"):
    return _core.chi(_text(curve), _text(triangulation), format)


def matching_count(curve, triangulation):
    return _core.matching_count(_text(curve), _text(triangulation))


def lift(curve, triangulation):
    return _json.loads(_core.lift(_text(curve), _text(triangulation)))


def mutate(matrix, indices):
    return _json.loads(_core.mutate(_text(matrix), list(indices)))
