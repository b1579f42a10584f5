## \file relwsd/corpus/lemmatizer.py
# -*- coding: utf-8 -*-
"""
Lemmatizers.

`SuffixLemmatizer` looks a lowercase word up in an exception table of
irregular forms and otherwise applies the first matching suffix rule. Both
tables are data files (`data/lemma_exceptions.tsv`, `data/suffix_rules.tsv`).
Rules are re-applied until nothing changes, so a lemma always lemmatizes to
itself.

`IdentityLemmatizer` returns its input; tests use it to keep fixtures literal.
"""

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional, Protocol

VOWELS = frozenset("aeiouy")
# Doubled final consonants that are kept when a suffix is stripped ("fill", "pass", "buzz").
KEEP_DOUBLE = frozenset("lsz")
MAX_PASSES = 8


class Lemmatizer(Protocol):
    name: str

    def __call__(self, word: str) -> str: ...


@dataclass(frozen=True, slots=True)
class SuffixRule:
    suffix: str
    replacement: str
    min_stem: int
    not_after: str = ""
    undouble: bool = False

    def apply(self, word: str) -> Optional[str]:
        if not word.endswith(self.suffix):
            return None
        stem = word[: len(word) - len(self.suffix)]
        if len(stem) < self.min_stem or not VOWELS.intersection(stem):
            return None
        if not stem[-1].isalnum():
            return None
        if self.not_after and stem[-1] in self.not_after:
            return None
        if self.undouble and len(stem) > 2 and stem[-1] == stem[-2] and stem[-1] not in VOWELS | KEEP_DOUBLE:
            stem = stem[:-1]
        return stem + self.replacement


class IdentityLemmatizer:
    name = "identity"

    def __call__(self, word: str) -> str:
        return word


class SuffixLemmatizer:
    """Exception table plus ordered suffix rules, applied to a fixpoint."""

    name = "suffix"

    def __init__(self, exceptions: dict[str, str], rules: list[SuffixRule]):
        self.exceptions = exceptions
        self.rules = rules
        self._cache: dict[str, str] = {}

    @classmethod
    def from_files(cls, exceptions_path: Optional[str | Path] = None, rules_path: Optional[str | Path] = None) -> "SuffixLemmatizer":
        """Load the tables; `None` selects the bundled data files."""
        exceptions = {}
        for fields in _read_table(exceptions_path, "lemma_exceptions.tsv"):
            exceptions[fields[0]] = fields[1]
        rules = []
        for fields in _read_table(rules_path, "suffix_rules.tsv"):
            fields = fields + [""] * (5 - len(fields))
            rules.append(SuffixRule(
                suffix=fields[0],
                replacement=fields[1],
                min_stem=int(fields[2] or 1),
                not_after=fields[3],
                undouble=fields[4] == "undouble",
            ))
        return cls(exceptions, rules)

    def _step(self, word: str) -> str:
        if word in self.exceptions:
            return self.exceptions[word]
        for rule in self.rules:
            result = rule.apply(word)
            if result is not None:
                return result
        return word

    def __call__(self, word: str) -> str:
        cached = self._cache.get(word)
        if cached is not None:
            return cached
        lemma = word
        for _ in range(MAX_PASSES):
            nxt = self._step(lemma)
            if nxt == lemma:
                break
            lemma = nxt
        self._cache[word] = lemma
        return lemma


def _read_table(path: Optional[str | Path], bundled: str) -> list[list[str]]:
    if path is None:
        text = resources.files("relwsd.corpus").joinpath(f"data/{bundled}").read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    rows = []
    for line in text.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        rows.append(line.rstrip("\n").split("\t"))
    return rows


_DEFAULT: dict[str, Lemmatizer] = {}


def get_lemmatizer(name: str) -> Lemmatizer:
    """Return the shared lemmatizer registered under `name` ('suffix' or 'identity')."""
    if name not in _DEFAULT:
        if name == "suffix":
            _DEFAULT[name] = SuffixLemmatizer.from_files()
        elif name == "identity":
            _DEFAULT[name] = IdentityLemmatizer()
        else:
            raise ValueError(f"unknown lemmatizer '{name}'")
    return _DEFAULT[name]
