"""
triangle_analytics Django application initialization.
"""

import importlib

from django.apps import AppConfig


class TriangleAnalyticsConfig(AppConfig):
    """
    Configuration for the triangle_analytics Django application.
    """

    name = "triangle_analytics"
    verbose_name = "Triangle analytics"
    default_auto_field = "django.db.models.AutoField"

    def ready(self):
        """Connect the signal receivers."""
        importlib.import_module("triangle_analytics.signals")
        importlib.import_module("triangle_analytics.consumers")
