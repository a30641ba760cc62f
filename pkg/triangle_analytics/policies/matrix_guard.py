"""
Admission rule for algorithms that build an n x n adjacency matrix.
"""

from __future__ import annotations

from typing import Optional

from django.conf import settings

from triangle_analytics.exceptions import CapacityError


def matrix_bytes(n: int) -> int:
    """Size of the packed matrix: n rows of ceil(n / 8) bytes."""
    return n * ((n + 7) // 8)


def max_matrix_n(override: Optional[int] = None) -> int:
    if override is not None:
        return override
    return getattr(settings, "TRIANGLES_MAX_MATRIX_N", 4096)


def check_matrix_allowed(algorithm: str, n: int, cap: Optional[int] = None) -> None:
    """
    Raises:
        CapacityError: when ``n`` exceeds the configured cap.
    """
    limit = max_matrix_n(cap)
    if n > limit:
        raise CapacityError(
            f"algorithm {algorithm} needs a {n}x{n} adjacency matrix ({matrix_bytes(n)} bytes); "
            f"n exceeds the cap {limit}, raise it with --max-matrix-n"
        )
