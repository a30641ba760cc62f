"""
Triangle finding, counting, pseudo-listing and listing algorithms.

Modules here depend only on the graph package and the helpers; they never
touch Django.
"""
