"""
Structure services module.
"""

from .structure_service import StructureService
from .treewidth_service import TreewidthService
from .fvs_service import FvsService

__all__ = [
    "StructureService",
    "TreewidthService",
    "FvsService",
]
