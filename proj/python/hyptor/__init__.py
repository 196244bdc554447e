"""Trace-formula geometric side, heat-trace expansions, and analytic torsion
for odd-dimensional hyperbolic manifolds.

The heavy lifting happens in the C++ extension ``_hyptor``; this package
re-exports it and adds small conveniences for dict-based inputs.
"""

import json as _json

from ._hyptor import *  # noqa: F401,F403
from ._hyptor import (
    __version__,
    geometric_side as _geometric_side,
    geometric_side_expansion as _geometric_side_expansion,
    regularized_trace_spectral as _regularized_trace_spectral,
)


def geometric_side(manifold, nu, t):
    """Geometric side I + H + C1 T + C2 T' at time t.

    ``manifold`` may be a dict (see the manifold JSON schema) or a JSON string.
    """
    if not isinstance(manifold, str):
        manifold = _json.dumps(manifold)
    return _geometric_side(manifold, nu, t)


def geometric_side_expansion(manifold, nu, order=5):
    if not isinstance(manifold, str):
        manifold = _json.dumps(manifold)
    return _geometric_side_expansion(manifold, nu, order)


def regularized_trace_spectral(spectral, t):
    if not isinstance(spectral, str):
        spectral = _json.dumps(spectral)
    return _regularized_trace_spectral(spectral, t)
