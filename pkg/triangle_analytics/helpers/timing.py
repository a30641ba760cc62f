"""
Monotonic wall-clock timing.
"""

from __future__ import annotations

import time
from typing import Callable, Tuple, TypeVar

from triangle_analytics.exceptions import UsageError

T = TypeVar("T")


class Stopwatch:
    """Context manager measuring elapsed wall time in milliseconds."""

    __slots__ = ("_start", "millis")

    def __init__(self):
        self._start = 0
        self.millis = 0.0

    def __enter__(self) -> "Stopwatch":
        self._start = time.perf_counter_ns()
        return self

    def __exit__(self, exc_type, exc, tb):
        self.millis = (time.perf_counter_ns() - self._start) / 1e6
        return False


def best_of(func: Callable[[], T], repeat: int = 1) -> Tuple[T, float]:
    """
    Run ``func`` ``repeat`` times; return its last result and the minimum time in ms.
    """
    if repeat < 1:
        raise UsageError(f"repeat must be at least 1, got {repeat}")
    best = float("inf")
    result = None
    for _ in range(repeat):
        with Stopwatch() as watch:
            result = func()
        best = min(best, watch.millis)
    return result, best
