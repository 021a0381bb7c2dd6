"""Resource caps shared by every enumeration in the package.

Each search that could blow up carries a default ceiling.  Setting the
environment variable ``GARSIDEKIT_CAP`` to a positive integer replaces
every default at once, which is handy for stress runs and for tests that
want to provoke the failure path.
"""

from __future__ import annotations

import os

ENV_VAR = "GARSIDEKIT_CAP"

ORBIT_CAP = 10**6
GROUP_SIZE_CAP = 51_840
SEARCH_CAP = 10**5


class ResourceCapExceeded(RuntimeError):
    """Raised when a bounded search runs past its ceiling."""


def cap(default: int) -> int:
    raw = os.environ.get(ENV_VAR)
    if raw:
        try:
            value = int(raw)
        except ValueError:
            return default
        if value > 0:
            return value
    return default
