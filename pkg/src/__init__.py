"""ultranorm: exact non-archimedean normed spaces over G-modules with a convex base."""

__version__ = "1.0.0"
