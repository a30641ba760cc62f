"""
Seeded test-graph generation.

Randomness comes from ``numpy.random.Generator(PCG64(seed))``; a spec always
yields the same graph.
"""

from __future__ import annotations

import logging
from typing import Optional

import attr
import numpy as np

from triangle_analytics.exceptions import UsageError
from triangle_analytics.graph.structures import Graph, normalize_pairs

logger = logging.getLogger(__name__)

CLIQUE = "clique"
PATH = "path"
CYCLE = "cycle"
STAR = "star"
ER = "er"
POWERLAW = "powerlaw"
KINDS = (CLIQUE, PATH, CYCLE, STAR, ER, POWERLAW)


@attr.s(frozen=True, slots=True)
class GenSpec:
    """
    What to generate.

    ``p`` is required for ``er`` (0 <= p <= 1) and ``alpha`` for ``powerlaw``
    (alpha > 1).
    """
    kind: str = attr.ib()
    n: int = attr.ib()
    p: Optional[float] = attr.ib(default=None)
    alpha: Optional[float] = attr.ib(default=None)
    seed: int = attr.ib(default=0)

    def __attrs_post_init__(self):
        if self.kind not in KINDS:
            raise UsageError(f"unknown graph kind {self.kind!r}; expected one of {', '.join(KINDS)}")
        if self.n < 1:
            raise UsageError(f"n must be at least 1, got {self.n}")
        if self.kind == ER and (self.p is None or not 0 <= self.p <= 1):
            raise UsageError(f"er graphs need 0 <= p <= 1, got {self.p}")
        if self.kind == POWERLAW and (self.alpha is None or not self.alpha > 1):
            raise UsageError(f"powerlaw graphs need alpha > 1, got {self.alpha}")
        if not 0 <= self.seed < 2**64:
            raise UsageError(f"seed must be an unsigned 64-bit integer, got {self.seed}")

    def __str__(self):
        parts = [self.kind, f"n={self.n}"]
        if self.p is not None:
            parts.append(f"p={self.p}")
        if self.alpha is not None:
            parts.append(f"alpha={self.alpha}")
        parts.append(f"seed={self.seed}")
        return ",".join(parts)


def parse_gen_spec(text: str) -> GenSpec:
    """
    Parse ``KIND,key=value,...`` with keys ``n`` (alias ``k``), ``p``, ``alpha``, ``seed``.
    """
    kind, *params = [part.strip() for part in text.split(",") if part.strip()] or [""]
    values = {}
    for param in params:
        key, sep, raw = param.partition("=")
        if not sep:
            raise UsageError(f"generator parameter {param!r} is not key=value")
        key = "n" if key == "k" else key
        try:
            if key in ("n", "seed"):
                values[key] = int(raw)
            elif key in ("p", "alpha"):
                values[key] = float(raw)
            else:
                raise UsageError(f"unknown generator parameter {key!r}")
        except ValueError:
            raise UsageError(f"bad value for generator parameter {key}: {raw!r}") from None
    if "n" not in values:
        raise UsageError(f"generator spec {text!r} is missing n")
    return GenSpec(kind=kind, **values)


def _erdos_renyi(n: int, p: float, rng: np.random.Generator):
    sources, targets = [], []
    for i in range(n - 1):
        count = rng.binomial(n - 1 - i, p)
        if count:
            chosen = rng.choice(n - 1 - i, size=count, replace=False) + (i + 1)
            sources.append(np.full(count, i, dtype=np.int64))
            targets.append(chosen.astype(np.int64))
    if not sources:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    return np.concatenate(sources), np.concatenate(targets)


def sample_powerlaw_degrees(n: int, alpha: float, rng: np.random.Generator) -> np.ndarray:
    """
    Inverse-CDF draw ``k = floor(u^(1/(1-alpha)))`` for ``u`` uniform in (0, 1],
    so that ``P(k >= K) = K^(1-alpha)``; capped at ``n - 1``, and one degree is
    adjusted by one when the sum is odd.
    """
    u = 1.0 - rng.random(n)
    with np.errstate(over="ignore"):
        raw = np.floor(u ** (1.0 / (1.0 - alpha)))
    degrees = np.minimum(raw, n - 1).astype(np.int64)
    if degrees.sum() % 2:
        degrees[0] += 1 if degrees[0] < n - 1 else -1
    return degrees


def _configuration_model(n: int, alpha: float, rng: np.random.Generator):
    degrees = sample_powerlaw_degrees(n, alpha, rng)
    stubs = np.repeat(np.arange(n, dtype=np.int64), degrees)
    rng.shuffle(stubs)
    return stubs[0::2], stubs[1::2]


def generate(spec: GenSpec) -> Graph:
    n = spec.n
    if spec.kind == CLIQUE:
        sources, targets = np.triu_indices(n, 1)
    elif spec.kind == PATH:
        sources = np.arange(n - 1, dtype=np.int64)
        targets = sources + 1
    elif spec.kind == CYCLE:
        sources = np.arange(n, dtype=np.int64)
        targets = (sources + 1) % n
    elif spec.kind == STAR:
        targets = np.arange(1, n, dtype=np.int64)
        sources = np.zeros(n - 1, dtype=np.int64)
    else:
        rng = np.random.Generator(np.random.PCG64(spec.seed))
        if spec.kind == ER:
            sources, targets = _erdos_renyi(n, spec.p, rng)
        else:
            sources, targets = _configuration_model(n, spec.alpha, rng)

    first, second, loops, duplicates = normalize_pairs(sources, targets)
    if loops or duplicates:
        logger.debug("Generated %s: dropped self_loops=%s multi_edges=%s", spec, loops, duplicates)
    return Graph.from_pairs(n, first, second)
