## \file relwsd/_compat.py
# -*- coding: utf-8 -*-
"""Stdlib backports for Python 3.10 (identical behavior to the 3.11+ stdlib)."""

import sys

if sys.version_info >= (3, 11):
    import tomllib
    from enum import StrEnum
else:
    from enum import Enum

    import tomli as tomllib

    class StrEnum(str, Enum):
        """Backport of enum.StrEnum: members are str and format/str as their value."""

        __str__ = str.__str__
        __format__ = str.__format__

        @staticmethod
        def _generate_next_value_(name, start, count, last_values):
            return name.lower()

__all__ = ["StrEnum", "tomllib"]
