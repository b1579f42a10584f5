## \file relwsd/logger/exceptions.py
# -*- coding: utf-8 -*-
"""
Exception hierarchy of the package.

`UsageError` and `DataError` are the two families the command line maps onto
exit codes 1 and 2.
"""

from pathlib import Path
from typing import Optional


class RelwsdError(Exception):
    """Base class for every error raised by the package."""

    exit_code: int = 2


class UsageError(RelwsdError):
    """Bad invocation: missing arguments, contradictory flags."""

    exit_code = 1


class DataError(RelwsdError):
    """Input data or artifacts that violate their contract."""

    exit_code = 2


class ConfigError(UsageError):
    """Configuration file that does not parse or names unknown keys."""


class JsonLoadError(DataError):
    """Malformed JSON, with the position of the first problem."""

    def __init__(self, source: str | Path, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.source = str(source)
        self.line = line
        self.column = column
        where = f" at line {line} column {column}" if line is not None else ""
        super().__init__(f"{self.source}{where}: {message}")


class LexiconError(DataError):
    """Lexicon entry violating an invariant; `location` names the entry."""

    def __init__(self, problems: list[str], source: str | Path = "<lexicon>"):
        self.problems = list(problems)
        self.source = str(source)
        head = self.problems[0] if self.problems else "invalid lexicon"
        more = f" (+{len(self.problems) - 1} more)" if len(self.problems) > 1 else ""
        super().__init__(f"{self.source}: {head}{more}")


class CascadeSyntaxError(DataError):
    """Cascade program that does not parse or names unknown heuristics/parameters."""

    def __init__(self, message: str, line: int, column: Optional[int] = None):
        self.line = line
        self.column = column
        super().__init__(f"line {line}: {message}")


class MatrixFormatError(DataError):
    """Matrix or vocabulary file with a bad header, version or body."""


class HashMismatchError(DataError):
    """Artifacts built from different vocabularies or stopword lists used together."""


class EmptyCorpusError(DataError):
    """Statistics requested over a corpus with no token positions."""


class VocabularyError(DataError):
    """Vocabulary id out of range or lemma unknown where it is required."""


class CountsMismatchError(DataError):
    """Cooccurrence counts with different radius or vocabulary merged together."""


class GoldStandardError(DataError):
    """Answers that cannot be scored against the gold standard."""


class PseudowordError(DataError):
    """Pseudoword task that cannot be generated from the given corpus."""
