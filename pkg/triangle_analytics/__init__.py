"""
Triangle finding, counting, pseudo-listing and listing for large sparse graphs.
"""

__version__ = '0.1.0'
