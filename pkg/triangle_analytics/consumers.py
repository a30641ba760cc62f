"""
Receivers for triangle_analytics signals.

Completed K sweeps are persisted as BenchmarkSweep records when the
TRIANGLES_RECORD_SWEEPS setting is on.
"""

import logging
from typing import Any

from django.conf import settings
from django.db import transaction
from django.dispatch import receiver

from triangle_analytics.graph.structures import Graph
from triangle_analytics.models import BenchmarkSweep, BenchmarkSweepRow
from triangle_analytics.signals import sweep_completed

logger = logging.getLogger("triangles.events")


@receiver(sweep_completed)
def record_sweep(
    sender: Any,  # pylint: disable=unused-argument
    sweep, graph: Graph, label: str = "", **_kwargs: Any
) -> None:
    """Store a completed sweep and its rows in one transaction."""
    if not getattr(settings, "TRIANGLES_RECORD_SWEEPS", False):
        return
    with transaction.atomic():
        record = BenchmarkSweep.objects.create(
            graph_label=label,
            algorithm=sweep.algorithm,
            n=graph.n,
            m=graph.m,
            total=sweep.total,
            best_k=sweep.best_k,
            repeat=sweep.repeat,
        )
        BenchmarkSweepRow.objects.bulk_create(
            BenchmarkSweepRow(
                sweep=record,
                k=row.k,
                high_degree_count=row.high_degree_count,
                millis=row.millis,
            )
            for row in sweep.rows
        )
    logger.info("Sweep recorded: id=%s algorithm=%s rows=%s", record.id, record.algorithm, len(sweep.rows))
