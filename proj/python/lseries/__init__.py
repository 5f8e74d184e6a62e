"""L-series of weakly holomorphic and harmonic Maass forms."""

import json

from ._core import *  # noqa: F401,F403
from ._core import verify as _verify


def verify(config=None, filter="", threads=0):
    """Run the verification suite and return the parsed report.

    ``config`` may be a dict with a ``checks`` list, a JSON string, or None
    for the bundled suite.
    """
    if isinstance(config, dict):
        config = json.dumps(config)
    return json.loads(_verify(config or "", filter, threads))
