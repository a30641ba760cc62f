"""
Auxiliary-space instrumentation.

The meter measures the peak of Python allocations (numpy buffers included)
made while it is active, relative to the moment the measured algorithm
declares its working representation ready. Graph storage, the output and
anything allocated before that point are therefore not counted, which is the
"additional space" of an algorithm.

Algorithms call the module-level :func:`representation_ready` once their input
representation is in place; it is a no-op when no meter is active.
"""

from __future__ import annotations

import tracemalloc
from contextvars import ContextVar
from typing import Optional

_active_meter: ContextVar[Optional["AuxiliarySpaceMeter"]] = ContextVar("active_space_meter", default=None)


class AuxiliarySpaceMeter:
    """
    Context manager reporting ``peak_bytes`` once closed.

    ``retained_bytes`` passed to :meth:`representation_ready` are structures
    the algorithm built together with its representation but keeps for the
    whole run (e.g. a permutation pair); they are added to the peak.
    """

    def __init__(self):
        self.peak_bytes = 0
        self._retained = 0
        self._baseline = 0
        self._started_tracing = False
        self._ready = False
        self._token = None

    def __enter__(self) -> "AuxiliarySpaceMeter":
        self._started_tracing = not tracemalloc.is_tracing()
        if self._started_tracing:
            tracemalloc.start()
        tracemalloc.reset_peak()
        self._baseline, _ = tracemalloc.get_traced_memory()
        self._token = _active_meter.set(self)
        return self

    def representation_ready(self, retained_bytes: int = 0) -> None:
        """Rebase on the first call only; nested algorithms do not move the baseline."""
        if self._ready:
            return
        self._ready = True
        tracemalloc.reset_peak()
        self._baseline, _ = tracemalloc.get_traced_memory()
        self._retained = retained_bytes
        self.peak_bytes = 0

    def __exit__(self, exc_type, exc, tb):
        _, peak = tracemalloc.get_traced_memory()
        self.peak_bytes = max(0, peak - self._baseline) + self._retained
        _active_meter.reset(self._token)
        if self._started_tracing:
            tracemalloc.stop()
        return False


def representation_ready(retained_bytes: int = 0) -> None:
    """Rebase the active meter, if any."""
    meter = _active_meter.get()
    if meter is not None:
        meter.representation_ready(retained_bytes)
