"""
Counters that algorithms fill in when handed a probe.
"""

from __future__ import annotations

import attr


@attr.s(slots=True)
class RunProbe:
    """
    Observations of one algorithm run.

    - ``rounds``: outer-loop iterations (tree-listing).
    - ``max_forward_set``: largest incremental set size seen (forward).
    - ``emissions``: raw triple emissions before any deduplication.
    """
    rounds: int = attr.ib(default=0)
    max_forward_set: int = attr.ib(default=0)
    emissions: int = attr.ib(default=0)
