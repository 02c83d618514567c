"""
Vertex cover oracle services module.
"""

from .query_log_service import QueryLog
from .vc_service import VcService

__all__ = [
    "QueryLog",
    "VcService",
]
