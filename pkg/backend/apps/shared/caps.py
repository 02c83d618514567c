"""
Caps - desk-scale limits read from settings, overridable for one command run
"""
import logging
import threading
from contextlib import contextmanager
from typing import Iterator

from django.conf import settings

from apps.shared.exceptions import CapExceededError
from apps.shared.messages.error import ERROR_MESSAGES
from apps.shared.messages.warning import WARNING_MESSAGES

logger = logging.getLogger(__name__)

# CLI flag that raises each cap
CAP_FLAGS = {
    "treewidth": "--tw-cap",
    "fvs": "--fvs-cap",
    "pattern": "--pattern-cap",
    "brute": "--brute-cap",
    "vc": "--vc-cap",
    "family_member": "--member-cap",
    "gadget_pattern": "--gadget-pattern-cap",
    "gadget_clause": "--gadget-clause-cap",
    "verify": "--verify-cap",
}

_lock = threading.Lock()
_overrides: dict[str, int] = {}


def get_cap(name: str) -> int:
    """Current value of a cap, CLI overrides first, then settings.FDEL_CAPS"""
    with _lock:
        if name in _overrides:
            return _overrides[name]
    return int(settings.FDEL_CAPS[name])


def check_cap(name: str, size: int, what: str) -> None:
    """
    Raise CapExceededError when size is above the named cap.

    Args:
        name: Key of settings.FDEL_CAPS
        size: Size of the input being checked
        what: Human-readable subject for the error message
    """
    cap = get_cap(name)
    if size > cap:
        raise CapExceededError(
            ERROR_MESSAGES["CAP_EXCEEDED"].format(
                what=what, cap=cap, size=size, flag=CAP_FLAGS.get(name, name)
            )
        )


@contextmanager
def override_caps(**caps: int | None) -> Iterator[None]:
    """
    Temporarily replace caps. None values are ignored.

    Every effective override is logged as a warning.
    """
    applied = {name: value for name, value in caps.items() if value is not None}
    with _lock:
        previous = dict(_overrides)
    for name, value in applied.items():
        old = previous.get(name, settings.FDEL_CAPS[name])
        if old != value:
            logger.warning(WARNING_MESSAGES["CAP_OVERRIDE"].format(name=name, old=old, new=value))
    with _lock:
        _overrides.update(applied)
    try:
        yield
    finally:
        with _lock:
            _overrides.clear()
            _overrides.update(previous)
