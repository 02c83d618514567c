"""
Reduction services module.
"""

from .cnf_service import CnfService
from .gadget_service import GadgetService
from .instance_service import InstanceService
from .verification_service import VerificationService

__all__ = [
    "CnfService",
    "GadgetService",
    "InstanceService",
    "VerificationService",
]
