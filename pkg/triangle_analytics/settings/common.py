"""Common settings for triangle_analytics app."""


def plugin_settings(settings):
    """
    Add the triangle_analytics defaults to a host project's settings, keeping
    any value the project already set.
    """
    defaults = {
        "TRIANGLES_DEFAULT_ALGORITHM": "compact-forward",
        # largest n for which an n x n adjacency matrix is built
        "TRIANGLES_MAX_MATRIX_N": 4096,
        "TRIANGLES_DEFAULT_OMEGA": 3.0,
        "TRIANGLES_FIT_MIN_TAIL_FRACTION": 0.01,
        # matrix rows unpacked per step of the A^3 diagonal computation
        "TRIANGLES_MATRIX_BLOCK_ROWS": 256,
        "TRIANGLES_RECORD_SWEEPS": False,
    }
    for name, value in defaults.items():
        if not hasattr(settings, name):
            setattr(settings, name, value)

    if "triangle_analytics" not in settings.INSTALLED_APPS:
        settings.INSTALLED_APPS += ["triangle_analytics"]
