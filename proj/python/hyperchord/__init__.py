"""Exact chordality and hyperbolicity toolkit for finite metric graphs."""

from ._hyperchord import Graph, GraphError, generate, __version__

__all__ = ["Graph", "GraphError", "generate", "__version__"]
