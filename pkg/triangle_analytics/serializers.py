"""
Serializers for the machine-readable summaries printed by the ``triangles`` command.
"""

from __future__ import annotations

from rest_framework import serializers
from rest_framework.renderers import JSONRenderer


class RunSummarySerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """One algorithm run: the json-summary output mode."""

    n = serializers.IntegerField(min_value=0)
    m = serializers.IntegerField(min_value=0)
    triangles = serializers.IntegerField(source="report.total", min_value=0)
    algorithm = serializers.CharField()
    k = serializers.IntegerField(allow_null=True)
    runtime_ms = serializers.FloatField(source="millis")
    peak_aux_bytes = serializers.IntegerField(allow_null=True)


class KSweepRowSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    k = serializers.IntegerField()
    n_k = serializers.IntegerField(source="high_degree_count")
    millis = serializers.FloatField()


class KSweepSummarySerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """Structured summary of a K sweep."""

    algorithm = serializers.CharField()
    triangles = serializers.IntegerField(source="total")
    best_k = serializers.IntegerField()
    repeat = serializers.IntegerField()
    rows = KSweepRowSerializer(many=True)


def render_json(serializer: serializers.BaseSerializer) -> str:
    return JSONRenderer().render(serializer.data).decode("utf8")
