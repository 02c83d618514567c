"""
Minors services module.
"""

from .subgraph_service import SubgraphService
from .minor_service import MinorService
from .packing_service import PackingService

__all__ = [
    "SubgraphService",
    "MinorService",
    "PackingService",
]
