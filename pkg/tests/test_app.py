#!/usr/bin/env python
"""
Tests for the app shell: settings defaults and the sweep admin.
"""

from types import SimpleNamespace

import pytest
from django.contrib import admin

from test_utils.graphs import K4, graph_from_edges
from triangle_analytics.admin import BenchmarkSweepAdmin
from triangle_analytics.models import BenchmarkSweep
from triangle_analytics.services.tuning import tune_k
from triangle_analytics.settings.common import plugin_settings


def test_plugin_settings_fill_defaults():
    host = SimpleNamespace(INSTALLED_APPS=["django.contrib.auth"], TRIANGLES_MAX_MATRIX_N=128)

    plugin_settings(host)

    assert host.TRIANGLES_MAX_MATRIX_N == 128
    assert host.TRIANGLES_DEFAULT_ALGORITHM == "compact-forward"
    assert host.TRIANGLES_DEFAULT_OMEGA == 3.0
    assert host.TRIANGLES_RECORD_SWEEPS is False
    assert host.INSTALLED_APPS == ["django.contrib.auth", "triangle_analytics"]


def test_plugin_settings_keep_installed_app():
    host = SimpleNamespace(INSTALLED_APPS=["triangle_analytics"])

    plugin_settings(host)

    assert host.INSTALLED_APPS == ["triangle_analytics"]


@pytest.mark.django_db
def test_sweep_admin_row_count(settings):
    settings.TRIANGLES_RECORD_SWEEPS = True
    tune_k(graph_from_edges(K4), "ayz-listing", [0, 1, 3], label="k4")

    model_admin = admin.site._registry[BenchmarkSweep]  # pylint: disable=protected-access

    assert isinstance(model_admin, BenchmarkSweepAdmin)
    assert model_admin.row_count(BenchmarkSweep.objects.get()) == 3
