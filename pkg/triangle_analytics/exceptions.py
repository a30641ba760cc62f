"""
Errors raised by triangle_analytics.

Library code raises these; the ``triangles`` management command maps them onto
process exit statuses.
"""

from __future__ import annotations

from typing import Optional


class TriangleAnalyticsError(Exception):
    """Base class for every error raised by this package."""


class GraphParseError(TriangleAnalyticsError):
    """A text edge list could not be parsed."""

    def __init__(self, message: str, *, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class GraphFormatError(TriangleAnalyticsError):
    """A binary graph file or an in-memory graph breaks the storage invariants."""


class CapacityError(TriangleAnalyticsError):
    """A vertex id, matrix or allocation exceeds what the representation can hold."""


class UsageError(TriangleAnalyticsError):
    """Invalid parameters: unknown rule or algorithm, bad K, bad generator spec."""


class UndefinedStatisticError(TriangleAnalyticsError):
    """A statistic has no value on the given input (e.g. transitivity without connected triples)."""


class ConsistencyError(TriangleAnalyticsError):
    """Two computations that must agree did not; this signals an implementation bug."""
