"""
Kernel services module.
"""

from .brute_force_service import BruteForceService
from .kernel_service import KernelService

__all__ = [
    "BruteForceService",
    "KernelService",
]
