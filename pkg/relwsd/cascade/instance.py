## \file relwsd/cascade/instance.py
# -*- coding: utf-8 -*-
"""
Disambiguation instances.

Instances are read from JSON-lines, one per line, context already normalized:

    {"meta": {"stopwords": "<hash>", "tool": "relwsd 0.1.0"}}
    {"id": "d001.s001.t004", "lemma": "bank", "pos": "NOUN", "target": 2,
     "tokens": ["money", {"lemma": "loan", "pos": "NOUN"}, "bank"]}

The optional first `meta` record carries the stopword hash of the
normalization run that produced the contexts.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterable, Optional

from relwsd.corpus.model import Label, PosTag, Token
from relwsd.jjson import j_dumps_lines, j_loads_lines
from relwsd.logger import logger
from relwsd.logger.exceptions import DataError


@dataclass(frozen=True)
class DisambiguationInstance:
    instance_id: str
    lemma: str
    pos: Optional[PosTag]
    context: tuple[Token, ...]
    target_index: int

    def __post_init__(self):
        if not 0 <= self.target_index < len(self.context):
            raise ValueError(f"{self.instance_id}: target index {self.target_index} outside the context")

    @property
    def target(self) -> Token:
        return self.context[self.target_index]

    def context_lemmas(self, radius: Optional[int] = None) -> list[tuple[int, Token]]:
        """Context tokens other than the target, within `radius` positions of it when given."""
        lo, hi = 0, len(self.context)
        if radius is not None:
            lo, hi = max(0, self.target_index - radius), min(hi, self.target_index + radius + 1)
        return [(i, self.context[i]) for i in range(lo, hi) if i != self.target_index]

    @classmethod
    def from_tokens(
        cls, instance_id: str, lemma: str, tokens: Iterable[str | Token], target_index: int, pos: Optional[str] = None
    ) -> "DisambiguationInstance":
        """Build an instance from plain lemmas (tests, pseudoword benchmarks)."""
        context = tuple(
            t if isinstance(t, Token) else Token(t, t, _label_of(t), i)
            for i, t in enumerate(tokens)
        )
        return cls(instance_id, lemma, PosTag(pos) if pos else None, context, target_index)

    def to_record(self) -> dict[str, Any]:
        tokens: list[Any] = []
        for t in self.context:
            tokens.append({"lemma": t.lemma, "pos": t.pos_tag.value} if t.pos_tag else t.lemma)
        record = {"id": self.instance_id, "lemma": self.lemma, "target": self.target_index, "tokens": tokens}
        if self.pos:
            record["pos"] = self.pos.value
        return record


def _label_of(lemma: str) -> Label:
    return Label(lemma) if lemma in (Label.NUMBER, Label.PROPER_NOUN) else Label.WORD


def _token(raw: Any, position: int) -> Token:
    if isinstance(raw, str):
        return Token(raw, raw, _label_of(raw), position)
    if isinstance(raw, dict) and isinstance(raw.get("lemma"), str) and raw["lemma"]:
        lemma = raw["lemma"]
        pos = PosTag(raw["pos"]) if raw.get("pos") else None
        return Token(raw.get("surface", lemma), lemma, _label_of(lemma), position, pos)
    raise ValueError(f"bad token {raw!r}")


def instance_from_record(record: Any) -> DisambiguationInstance:
    """Parse one JSON record; raises `ValueError` on a malformed record."""
    if not isinstance(record, dict):
        raise ValueError("instance must be an object")
    for key in ("id", "lemma", "tokens", "target"):
        if key not in record:
            raise ValueError(f"missing '{key}'")
    if not isinstance(record["tokens"], list):
        raise ValueError("'tokens' must be a list")
    if not isinstance(record["target"], int) or isinstance(record["target"], bool):
        raise ValueError("'target' must be an integer")
    context = tuple(_token(raw, i) for i, raw in enumerate(record["tokens"]))
    pos = PosTag(record["pos"]) if record.get("pos") else None
    return DisambiguationInstance(str(record["id"]), str(record["lemma"]), pos, context, record["target"])


def read_instances(file_path: str | Path) -> tuple[dict, list[DisambiguationInstance]]:
    """Read an instance file.

    Returns:
        tuple[dict, list[DisambiguationInstance]]: The `meta` record (empty if absent) and the instances.

    Raises:
        DataError: A malformed record or a repeated instance id, with its line number.
    """
    path = Path(file_path)
    meta: dict = {}
    instances: list[DisambiguationInstance] = []
    seen: set[str] = set()
    for lineno, record in j_loads_lines(path):
        if isinstance(record, dict) and set(record) == {"meta"}:
            if instances or meta:
                raise DataError(f"{path}:{lineno}: meta record must come first")
            meta = dict(record["meta"])
            continue
        try:
            inst = instance_from_record(record)
        except ValueError as ex:
            logger.error(f"{path}:{lineno}: bad instance", ex, exc_info=False)
            raise DataError(f"{path}:{lineno}: {ex}") from ex
        if inst.instance_id in seen:
            raise DataError(f"{path}:{lineno}: instance id '{inst.instance_id}' repeated")
        seen.add(inst.instance_id)
        instances.append(inst)
    logger.debug(f"Read {len(instances)} instances from {path}")
    return meta, instances


def write_instances(instances: Iterable[DisambiguationInstance], file_path: str | Path, meta: Optional[dict] = None) -> int:
    records: list[Any] = [{"meta": meta}] if meta else []
    records.extend(inst.to_record() for inst in instances)
    return j_dumps_lines(records, file_path)
