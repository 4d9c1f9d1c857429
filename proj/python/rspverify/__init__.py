"""Remote state preparation verification.

Density matrices are 2x2 or 4x4 complex numpy arrays in the |m_A m_B> basis
(Bob's index fastest). Phases are in radians except the ``phi_deg`` argument
of :func:`sweep_noise`. Table commands return CSV or JSON text.
"""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import __version__, verify as _verify


def verify_report(shots=1_000_000, seed=20240501, inject_wrong_rule=False):
    """Run every property suite and return the parsed JSON report."""
    return _json.loads(_verify(shots=shots, seed=seed, inject_wrong_rule=inject_wrong_rule))
