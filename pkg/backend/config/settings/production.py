"""
Production settings: long unattended runs.
"""
import sys
from .base import *  # noqa: F401,F403

DEBUG = False

if FDEL_THREADS < 1:
    print("FATAL: FDEL_THREADS must be at least 1.", file=sys.stderr)
    sys.exit(1)

# Exact fvs of every query is costly on large sweeps
FDEL_TRACK_QUERY_FVS = os.getenv("FDEL_TRACK_QUERY_FVS", "False") == "True"
