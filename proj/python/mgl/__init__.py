"""Python access to the mgl library.

Structured objects cross the boundary as the same JSON documents the
command-line tool reads and writes; these wrappers accept dicts or strings.
"""

import json

from . import _core
from ._core import (
    Error,
    GuardError,
    InputError,
    check_action_compatibility,
    check_operad_laws,
    euler_characteristic,
    fiber_report,
    macp_f_vector,
    order_complex_f_vector,
)

__all__ = [
    "Error",
    "GuardError",
    "InputError",
    "check_action_compatibility",
    "check_operad_laws",
    "direct_sum",
    "dressian_cells",
    "euler_characteristic",
    "fiber_report",
    "macp",
    "macp_f_vector",
    "order_complex_f_vector",
    "slide",
    "validate",
]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def validate(kind, obj):
    """Return (ok, message) for a matroid, tropical, chirotope or orval object."""
    return _core.validate(kind, _text(obj))


def macp(d, n):
    return json.loads(_core.macp(d, n))


def dressian_cells(d, n):
    return json.loads(_core.dressian_cells(d, n))


def direct_sum(a, b):
    return json.loads(_core.direct_sum(_text(a), _text(b)))


def slide(phi, family, t):
    return json.loads(_core.slide(_text(phi), _text(family), [str(w) for w in t]))
