"""Desk-scale bounds and the exceptions raised when they are crossed.

Every bound can be overridden from the environment, e.g.
``CHARFIELDS_MAX_LEVEL=2000000``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields


class BoundExceeded(ValueError):
    """A computation would leave the configured desk-scale range."""


class NoElementOfOrder(ValueError):
    """The group has no element of the requested order."""


class IndeterminateField(ValueError):
    """The requested field is not determined by the available theory."""


@dataclass
class Bounds:
    max_level: int = 10**6          # cyclotomic level
    max_field_order: int = 2**20    # p**n for a constructed finite field
    max_log_table: int = 2**16      # discrete-log tables only up to this size
    max_m: int = 4                  # GL_m class enumeration
    max_q: int = 9                  # GL_m class enumeration, m >= 3
    max_ellr: int = 27

    @classmethod
    def from_env(cls, environ=None) -> "Bounds":
        environ = os.environ if environ is None else environ
        b = cls()
        for f in fields(cls):
            key = "CHARFIELDS_" + f.name.upper()
            if key in environ:
                setattr(b, f.name, int(environ[key]))
        return b


bounds = Bounds.from_env()


def check_level(n: int) -> None:
    if n > bounds.max_level:
        raise BoundExceeded(f"cyclotomic level {n} exceeds max_level={bounds.max_level}")
