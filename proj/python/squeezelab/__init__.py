"""Representations of squeezed number states |m, r> = S(r)|m>."""

import json

from ._squeezelab import *  # noqa: F401,F403
from ._squeezelab import verify_json as _verify_json

__version__ = "0.1.0"


def verify(suite="all", m_max=12):
    """Run the invariant checks and return the report as a dict."""
    return json.loads(_verify_json(suite, m_max))
