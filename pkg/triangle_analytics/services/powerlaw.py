"""
Continuous power-law degree model.

A fraction ``p_k = k^(1-alpha) - (k+1)^(1-alpha)`` of the vertices has degree
``k >= 1``, so the fraction of degree at least ``K`` is ``K^(1-alpha)`` and
about ``n * K^(1-alpha)`` vertices have degree above ``K``.
"""

from __future__ import annotations

from typing import Dict

import attr

from triangle_analytics.exceptions import UsageError


def _check_alpha(instance, attribute, value):  # pylint: disable=unused-argument
    if not value > 1:
        raise UsageError(f"power-law exponent must be > 1, got {value}")


def _check_n(instance, attribute, value):  # pylint: disable=unused-argument
    if value < 0:
        raise UsageError(f"vertex count must be non-negative, got {value}")


@attr.s(frozen=True, slots=True)
class PowerLawModel:
    alpha: float = attr.ib(converter=float, validator=_check_alpha)
    n: int = attr.ib(default=0, validator=_check_n)

    def pk(self, k: int) -> float:
        """Fraction of vertices of degree ``k``."""
        if k < 1:
            raise UsageError(f"degree must be at least 1, got {k}")
        return k ** (1 - self.alpha) - (k + 1) ** (1 - self.alpha)

    def tail(self, k: int) -> float:
        """Fraction of vertices of degree at least ``k``."""
        if k < 1:
            raise UsageError(f"degree must be at least 1, got {k}")
        return k ** (1 - self.alpha)

    def expected_high_degree_count(self, k: int) -> float:
        """``n_K = n * K^(1-alpha)``."""
        return self.n * self.tail(k)

    def expected_histogram(self, k_max: int) -> Dict[int, int]:
        """``round(n * p_k)`` for ``1 <= k <= k_max``, zero counts dropped."""
        histogram = {}
        for k in range(1, k_max + 1):
            count = round(self.n * self.pk(k))
            if count:
                histogram[k] = count
        return histogram


def pk(model: PowerLawModel, k: int) -> float:
    return model.pk(k)


def expected_high_degree_count(model: PowerLawModel, k: int) -> float:
    return model.expected_high_degree_count(k)
