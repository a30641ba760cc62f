"""Models recording K-sweep benchmark results."""

from django.db import models
from model_utils.models import TimeStampedModel


class BenchmarkSweep(TimeStampedModel):
    """One completed sweep of a K-parameterized algorithm over a graph."""

    graph_label = models.CharField(max_length=255, blank=True, help_text="Input path or generator spec.")
    algorithm = models.CharField(max_length=64)
    n = models.PositiveBigIntegerField()
    m = models.PositiveBigIntegerField()
    total = models.PositiveBigIntegerField(help_text="Triangle count every run agreed on.")
    best_k = models.PositiveIntegerField()
    repeat = models.PositiveIntegerField(default=1)

    class Meta:
        """Meta options for BenchmarkSweep model."""

        ordering = ["-created"]

    def __str__(self):
        return f"<BenchmarkSweep: {self.algorithm} on {self.graph_label or '?'} (best K={self.best_k})>"


class BenchmarkSweepRow(models.Model):
    """Timing of one K within a sweep."""

    sweep = models.ForeignKey(BenchmarkSweep, on_delete=models.CASCADE, related_name="rows")
    k = models.PositiveIntegerField()
    high_degree_count = models.PositiveBigIntegerField()
    millis = models.FloatField()

    class Meta:
        """Meta options for BenchmarkSweepRow model."""

        ordering = ["sweep", "k"]
        constraints = [
            models.UniqueConstraint(fields=["sweep", "k"], name="uniq_sweep_k"),
        ]

    def __str__(self):
        return f"<BenchmarkSweepRow: K={self.k} n_K={self.high_degree_count} {self.millis:.3f}ms>"
