"""
Graph core services module.
"""

from .graph_service import GraphCatalog, GraphService
from .dimacs_service import DimacsService

__all__ = [
    "GraphService",
    "GraphCatalog",
    "DimacsService",
]
