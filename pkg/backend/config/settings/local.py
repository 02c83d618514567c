"""
Local development settings.
"""
from .base import *  # noqa: F401,F403

# Debug witness assembly and solver self checks
DEBUG = True
