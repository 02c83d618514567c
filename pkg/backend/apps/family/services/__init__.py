"""
Family services module.
"""

from .family_service import FamilyService
from .family_file_service import FamilyFileService

__all__ = [
    "FamilyService",
    "FamilyFileService",
]
