## \file relwsd/evaluation/gold.py
# -*- coding: utf-8 -*-
"""
Gold standards and answer files.

Gold file, one instance per line, every acceptable key listed:

    d001.t001 bank%1:14:00::
    d001.t002 interest%1:09:00:: interest%1:07:02::

Answer file, one answered instance per line; unanswered instances are absent:

    # tool=relwsd 0.1.0
    d001.t001 bank%1:14:00:: relevance_filter
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Optional

from relwsd.file import save_text_file
from relwsd.logger import logger
from relwsd.logger.exceptions import GoldStandardError
from relwsd.tsv import format_header


@dataclass(frozen=True)
class Answer:
    instance_id: str
    sense_key: str
    heuristic: str = "system"


GoldStandard = dict[str, frozenset[str]]


def _lines(path: Path) -> Iterator[tuple[int, list[str]]]:
    with path.open("r", encoding="utf-8") as f:
        for lineno, line in enumerate(f, 1):
            if not line.strip() or line.startswith("#"):
                continue
            yield lineno, line.split()


def read_gold(file_path: str | Path) -> GoldStandard:
    """Read a gold file.

    Raises:
        GoldStandardError: A line without keys or a repeated instance id.
    """
    path = Path(file_path)
    gold: GoldStandard = {}
    for lineno, fields in _lines(path):
        if len(fields) < 2:
            raise GoldStandardError(f"{path}:{lineno}: instance '{fields[0]}' lists no sense key")
        if fields[0] in gold:
            raise GoldStandardError(f"{path}:{lineno}: instance '{fields[0]}' repeated")
        gold[fields[0]] = frozenset(fields[1:])
    logger.debug(f"Read {len(gold)} gold instances from {path}")
    return gold


def write_gold(gold: dict[str, Iterable[str]], file_path: str | Path) -> Path:
    lines = [f"{instance_id} {' '.join(sorted(keys))}" for instance_id, keys in gold.items()]
    return save_text_file(lines, file_path)


def read_answers(file_path: str | Path) -> list[Answer]:
    """Read an answer file; the heuristic column is optional."""
    path = Path(file_path)
    answers = []
    for lineno, fields in _lines(path):
        if len(fields) not in (2, 3):
            raise GoldStandardError(f"{path}:{lineno}: expected 'instance_id sense_key [heuristic]'")
        answers.append(Answer(*fields))
    return answers


def write_answers(answers: Iterable[Answer | tuple], file_path: str | Path, meta: Optional[dict] = None) -> Path:
    lines = format_header(meta)
    for answer in answers:
        a = answer if isinstance(answer, Answer) else Answer(*answer)
        lines.append(f"{a.instance_id} {a.sense_key} {a.heuristic}")
    return save_text_file(lines, file_path)
