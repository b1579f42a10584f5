## \file relwsd/lexicon/multiword.py
# -*- coding: utf-8 -*-
"""
Multiword detection.

Multiword lemmas (`the_good_old_days`) are indexed by their normalized
components (`good old day`) in a trie. Detection scans a token sequence left
to right. At each position a depth-first search tries, for every component,
each form the token can take (surface, lemma, and the base forms the
inflection table lists for either), backtracking when a branch dies. The
longest complete match starting at the position is emitted and its tokens
are consumed; otherwise the scan moves one token on.

Inflection table (TSV, `surface<TAB>base`):

    days	day
    geese	goose
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence

from relwsd.corpus.model import Token
from relwsd.logger import logger
from relwsd.logger.exceptions import DataError
from relwsd.tsv import read_tsv


@dataclass
class _Node:
    children: dict[str, "_Node"] = field(default_factory=dict)
    keys: frozenset[str] = frozenset()


@dataclass(frozen=True)
class MultiwordMatch:
    start: int
    end: int  # exclusive
    sense_keys: frozenset[str]

    @property
    def span(self) -> tuple[int, int]:
        return self.start, self.end

    def covers(self, index: int) -> bool:
        return self.start <= index < self.end


class MultiwordIndex:
    """Component sequences (length >= 2) to sense keys, plus an inflection table."""

    def __init__(self, inflections: Optional[dict[str, set[str]]] = None):
        self._root = _Node()
        self.entries: dict[tuple[str, ...], frozenset[str]] = {}
        self.inflections: dict[str, set[str]] = inflections or {}

    def __len__(self) -> int:
        return len(self.entries)

    def add(self, components: Sequence[str], sense_keys: Iterable[str]) -> None:
        components = tuple(components)
        if len(components) < 2:
            raise ValueError(f"multiword needs at least two components, got {components}")
        node = self._root
        for comp in components:
            node = node.children.setdefault(comp, _Node())
        node.keys = node.keys | frozenset(sense_keys)
        self.entries[components] = node.keys

    def forms(self, token: Token | str) -> list[str]:
        """Every form a token may match a component with, in a fixed order."""
        if isinstance(token, Token):
            base = [token.surface.lower(), token.lemma]
        else:
            base = [token]
        found = list(dict.fromkeys(base))
        for form in base:
            for extra in sorted(self.inflections.get(form, ())):
                if extra not in found:
                    found.append(extra)
        return found

    def _longest(self, tokens: Sequence[Token | str], start: int) -> Optional[MultiwordMatch]:
        best_end, best_keys = 0, frozenset()

        def search(pos: int, node: _Node) -> None:
            nonlocal best_end, best_keys
            if node.keys and pos - start >= 2:
                if pos > best_end:
                    best_end, best_keys = pos, node.keys
                elif pos == best_end:
                    best_keys = best_keys | node.keys
            if pos >= len(tokens):
                return
            for form in self.forms(tokens[pos]):
                child = node.children.get(form)
                if child is not None:
                    search(pos + 1, child)

        search(start, self._root)
        if best_end:
            return MultiwordMatch(start, best_end, best_keys)
        return None

    def detect(self, tokens: Sequence[Token | str]) -> list[MultiwordMatch]:
        """Leftmost-longest, non-overlapping matches."""
        matches = []
        i = 0
        while i < len(tokens):
            match = self._longest(tokens, i)
            if match is None:
                i += 1
            else:
                matches.append(match)
                i = match.end
        return matches


def detect_multiwords(tokens: Sequence[Token | str], index: MultiwordIndex) -> list[tuple[tuple[int, int], frozenset[str]]]:
    """Spans `(start, end)` (end exclusive) of detected multiwords with their sense keys.

    Example:
        >>> index = MultiwordIndex()
        >>> index.add(("good", "old", "day"), ["the_good_old_days%1"])
        >>> detect_multiwords(["good", "old", "day"], index)
        [((0, 3), frozenset({'the_good_old_days%1'}))]
    """
    return [(m.span, m.sense_keys) for m in index.detect(tokens)]


def load_inflections(file_path: str | Path) -> dict[str, set[str]]:
    """Read a `surface<TAB>base` table; a surface may list several bases on separate lines."""
    path = Path(file_path)
    try:
        df = read_tsv(path, ["surface", "base"])
    except ValueError as ex:
        logger.error(f"Malformed inflection table {path}", ex, exc_info=False)
        raise DataError(f"{path}: {ex}") from ex
    table: dict[str, set[str]] = {}
    for surface, base in df.itertuples(index=False, name=None):
        table.setdefault(surface.lower(), set()).add(base.lower())
    return table
