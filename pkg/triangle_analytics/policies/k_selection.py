"""
Degree-threshold (K) selection.

Each rule evaluates an asymptotic optimum with multiplicative constant 1 and
rounds up:

- ``sqrt-m``: sqrt(m), listing in O(m^(3/2)) (ayz-listing, new-listing).
- ``ayz-pseudo``: m^((omega-1)/(omega+1)), pseudo-listing with a matrix product of exponent omega.
- ``powerlaw``: n^(1/alpha), listing on power-law graphs of exponent alpha.
- ``sqrt-mlogn``: sqrt(m ln n), listing with binary search instead of a marks array.
- ``ayz-pseudo-powerlaw``: n^((omega-1)/(omega*alpha-omega+2)), pseudo-listing on power-law graphs.

A K policy is an explicit integer, ``auto`` (``auto:sqrt-m``) or ``auto:RULE``.
"""

from __future__ import annotations

import math
from typing import Optional

import attr

from triangle_analytics.exceptions import UsageError

SQRT_M = "sqrt-m"
AYZ_PSEUDO = "ayz-pseudo"
POWERLAW = "powerlaw"
SQRT_MLOGN = "sqrt-mlogn"
AYZ_PSEUDO_POWERLAW = "ayz-pseudo-powerlaw"

RULES = (SQRT_M, AYZ_PSEUDO, POWERLAW, SQRT_MLOGN, AYZ_PSEUDO_POWERLAW)
POWERLAW_RULES = (POWERLAW, AYZ_PSEUDO_POWERLAW)
DEFAULT_RULE = SQRT_M

# absorbs floating-point error on exact powers
CEIL_TOLERANCE = 1e-9


def _ceil(value: float) -> int:
    return max(0, math.ceil(value - CEIL_TOLERANCE))


def k_formula(rule: str, n: int, m: int, alpha: Optional[float] = None, omega: float = 3.0) -> int:
    """
    Evaluate ``rule`` for a graph of ``n`` vertices and ``m`` edges.

    Raises:
        UsageError: on an unknown rule, a power-law rule without ``alpha > 1``,
            or ``omega < 2``.
    """
    if rule not in RULES:
        raise UsageError(f"unknown K rule {rule!r}; expected one of {', '.join(RULES)}")
    if omega < 2:
        raise UsageError(f"omega must be at least 2, got {omega}")
    if rule in POWERLAW_RULES and (alpha is None or alpha <= 1):
        raise UsageError(f"K rule {rule} needs a power-law exponent alpha > 1, got {alpha}")
    if n < 0 or m < 0:
        raise UsageError("vertex and edge counts must be non-negative")

    if rule == SQRT_M:
        return math.isqrt(m - 1) + 1 if m else 0
    if rule == AYZ_PSEUDO:
        return _ceil(m ** ((omega - 1) / (omega + 1))) if m else 0
    if rule == SQRT_MLOGN:
        return _ceil(math.sqrt(m * math.log(n))) if m and n > 1 else 0
    if n == 0:
        return 0
    if rule == POWERLAW:
        return _ceil(n ** (1 / alpha))
    return _ceil(n ** ((omega - 1) / (omega * alpha - omega + 2)))


@attr.s(frozen=True, slots=True)
class KPolicy:
    """Either an explicit threshold or the name of a K rule."""
    explicit: Optional[int] = attr.ib(default=None)
    rule: Optional[str] = attr.ib(default=None)

    @property
    def needs_alpha(self) -> bool:
        return self.rule in POWERLAW_RULES

    def resolve(self, n: int, m: int, alpha: Optional[float] = None, omega: float = 3.0) -> int:
        if self.explicit is not None:
            return self.explicit
        return k_formula(self.rule, n, m, alpha, omega)

    def __str__(self):
        return str(self.explicit) if self.explicit is not None else f"auto:{self.rule}"


def parse_k_policy(text: str) -> KPolicy:
    """
    Parse ``INT``, ``auto`` or ``auto:RULE``.

    Raises:
        UsageError: on anything else, or on a negative integer.
    """
    text = text.strip()
    if text == "auto":
        return KPolicy(rule=DEFAULT_RULE)
    if text.startswith("auto:"):
        rule = text[len("auto:"):]
        if rule not in RULES:
            raise UsageError(f"unknown K rule {rule!r}; expected one of {', '.join(RULES)}")
        return KPolicy(rule=rule)
    try:
        value = int(text)
    except ValueError:
        raise UsageError(f"K must be an integer, 'auto' or 'auto:RULE', got {text!r}") from None
    if value < 0:
        raise UsageError(f"K must be non-negative, got {value}")
    return KPolicy(explicit=value)
