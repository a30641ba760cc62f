"""
Signals sent by triangle_analytics.

``sweep_completed`` is sent once a K sweep has finished and every run agreed
on the triangle total. Arguments: ``sweep`` (KSweepResult), ``graph`` (Graph)
and ``label`` (str describing the input).
"""

from django.dispatch import Signal

sweep_completed = Signal()
