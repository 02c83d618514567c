import os
from dotenv import load_dotenv
from pathlib import Path

load_dotenv()


# === CORE SETTINGS ===

BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.getenv("SECRET_KEY", "fdel-local-only")

DEBUG = os.getenv("DEBUG", "False") == "True"

ALLOWED_HOSTS: list[str] = []


# === APPLICATION DEFINITION ===

CREATED_APPS = (
    "apps.graphs",
    "apps.structure",
    "apps.minors",
    "apps.matching",
    "apps.family",
    "apps.vc_oracle",
    "apps.kernel",
    "apps.reduction",
    "apps.cli",
)

INSTALLED_APPS = list(CREATED_APPS)

# No persistence: every input and output is a file
DATABASES: dict = {}


# === DESK-SCALE LIMITS ===

FDEL_CAPS = {
    "treewidth": int(os.getenv("FDEL_TREEWIDTH_CAP", 16)),
    "fvs": int(os.getenv("FDEL_FVS_CAP", 32)),
    "pattern": int(os.getenv("FDEL_PATTERN_CAP", 12)),
    "brute": int(os.getenv("FDEL_BRUTE_CAP", 16)),
    "vc": int(os.getenv("FDEL_VC_CAP", 40)),
    "family_member": int(os.getenv("FDEL_FAMILY_MEMBER_CAP", 10)),
    "gadget_pattern": int(os.getenv("FDEL_GADGET_PATTERN_CAP", 4)),
    "gadget_clause": int(os.getenv("FDEL_GADGET_CLAUSE_CAP", 2)),
    "verify": int(os.getenv("FDEL_VERIFY_CAP", 48)),
}


# === SOLVER ===

FDEL_THREADS = int(os.getenv("FDEL_THREADS", 1))

FDEL_TRACK_QUERY_FVS = os.getenv("FDEL_TRACK_QUERY_FVS", "True") == "True"


# === I18N ===

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True


# === LOGGING ===

FDEL_LOG_LEVEL = os.getenv("FDEL_LOG_LEVEL", "INFO")

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "[{asctime}] {levelname} {name} {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
    },
    "root": {
        "handlers": ["console"],
        "level": "WARNING",
    },
    "loggers": {
        "django": {
            "handlers": ["console"],
            "level": "WARNING",
            "propagate": False,
        },
        "apps": {
            "handlers": ["console"],
            "level": FDEL_LOG_LEVEL,
            "propagate": False,
        },
    },
}
