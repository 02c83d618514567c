"""pytest wiring: configure Django the same way backend/manage.py does."""
import os
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent / "backend"))


def pytest_configure(config):
    django_env = os.getenv("DJANGO_ENV", "local")
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", f"config.settings.{django_env}")
    import django
    from django.test.utils import setup_test_environment

    django.setup()
    setup_test_environment()
