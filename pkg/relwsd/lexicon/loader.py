## \file relwsd/lexicon/loader.py
# -*- coding: utf-8 -*-
"""
Lexicon interchange file.

```json
{
  "provenance": "cntlist counts from SemCor",
  "entries": [
    {"lemma": "bank", "pos": "NOUN", "senses": [
      {"sense_key": "bank%1:14:00::", "rank": 1,
       "gloss": "a financial institution that lends money", "count": 6,
       "hyponyms": ["credit_union%1:14:00::"], "examples": ["he cashed a check at the bank"]}
    ]}
  ]
}
```

A sense gives its gloss as text (`gloss`, normalized on load) or as
lemmas (`gloss_tokens`), and its frequency as a raw `count` or as `rel_freq`.
Counts are normalized per entry; an entry with no frequency information, or
only zeros, gets a uniform distribution.

Problems are reported with their location, e.g.
`entries[3].senses[1]: duplicate rank 2`.
"""

import math
from pathlib import Path
from typing import Any, Optional

from relwsd.corpus.model import PosTag, StopwordList
from relwsd.corpus.normalizer import Normalizer
from relwsd.jjson import j_dumps, j_loads
from relwsd.lexicon.model import LEXICON_POS, Lexicon, LexiconEntry, SenseEntry
from relwsd.lexicon.multiword import MultiwordIndex
from relwsd.logger import logger
from relwsd.logger.exceptions import LexiconError

REL_FREQ_TOLERANCE = 1e-9
_POS_NAMES = {p.value for p in LEXICON_POS}


def _default_normalizer() -> Normalizer:
    return Normalizer(StopwordList.load())


def _gloss(sense: dict, normalizer: Normalizer) -> tuple[str, ...]:
    if isinstance(sense.get("gloss"), str):
        return tuple(normalizer.normalize_text(sense["gloss"]))
    return tuple(sense.get("gloss_tokens") or ())


def _examples(sense: dict, normalizer: Normalizer) -> tuple[tuple[str, ...], ...]:
    if "examples" in sense:
        return tuple(tuple(normalizer.normalize_text(text)) for text in sense["examples"])
    return tuple(tuple(tokens) for tokens in sense.get("example_tokens") or ())


def _check_sense(where: str, sense: Any, normalizer: Normalizer) -> list[str]:
    if not isinstance(sense, dict):
        return [f"{where}: sense must be an object"]
    problems = []
    if not isinstance(sense.get("sense_key"), str) or not sense.get("sense_key"):
        problems.append(f"{where}: missing sense_key")
    rank = sense.get("rank")
    if not isinstance(rank, int) or isinstance(rank, bool) or rank < 1:
        problems.append(f"{where}: rank must be a positive integer")
    if "gloss" in sense and "gloss_tokens" in sense:
        problems.append(f"{where}: give gloss or gloss_tokens, not both")
    elif "gloss" in sense and not isinstance(sense["gloss"], str):
        problems.append(f"{where}: gloss must be text")
    elif "gloss_tokens" in sense and not (
        isinstance(sense["gloss_tokens"], list) and all(isinstance(t, str) and t for t in sense["gloss_tokens"])
    ):
        problems.append(f"{where}: gloss_tokens must be a list of lemmas")
    elif not _gloss(sense, normalizer):
        problems.append(f"{where}: empty gloss after normalization")
    if "count" in sense and "rel_freq" in sense:
        problems.append(f"{where}: give count or rel_freq, not both")
    if "count" in sense and (not isinstance(sense["count"], int) or isinstance(sense["count"], bool) or sense["count"] < 0):
        problems.append(f"{where}: count must be a non-negative integer")
    if "rel_freq" in sense:
        value = sense["rel_freq"]
        if isinstance(value, bool) or not isinstance(value, (int, float)) or not 0 <= value <= 1:
            problems.append(f"{where}: rel_freq must lie in [0, 1]")
    hyponyms = sense.get("hyponyms", [])
    if not isinstance(hyponyms, list) or not all(isinstance(h, str) for h in hyponyms):
        problems.append(f"{where}: hyponyms must be a list of sense keys")
    for name in ("examples", "example_tokens"):
        if name in sense and not isinstance(sense[name], list):
            problems.append(f"{where}: {name} must be a list")
    return problems


def _check_frequencies(where: str, senses: list[dict]) -> list[str]:
    with_count = [s for s in senses if "count" in s]
    with_rel = [s for s in senses if "rel_freq" in s]
    if with_count and with_rel:
        return [f"{where}: mixes count and rel_freq"]
    if with_rel and len(with_rel) != len(senses):
        return [f"{where}: rel_freq must be given for every sense or none"]
    if with_rel:
        total = math.fsum(float(s["rel_freq"]) for s in senses)
        if total > 0 and abs(total - 1.0) > REL_FREQ_TOLERANCE:
            return [f"{where}: rel_freq sums to {total!r}, not 1"]
    return []


def validate_lexicon_data(data: Any, normalizer: Optional[Normalizer] = None) -> list[str]:
    """Every invariant violation of a parsed lexicon file, in file order.

    Args:
        data (Any): Parsed JSON.
        normalizer (Normalizer, optional): Gloss normalization; defaults to the bundled stopword list.

    Returns:
        list[str]: Located problems; empty when the data loads.
    """
    normalizer = normalizer or _default_normalizer()
    if not isinstance(data, dict) or not isinstance(data.get("entries"), list):
        return ["top level: expected an object with an 'entries' list"]
    if "provenance" in data and not isinstance(data["provenance"], str):
        return ["top level: provenance must be text"]

    problems: list[str] = []
    seen_entries: dict[tuple, int] = {}
    seen_keys: dict[str, str] = {}
    hyponym_refs: list[tuple[str, str]] = []
    for i, entry in enumerate(data["entries"]):
        where = f"entries[{i}]"
        if not isinstance(entry, dict):
            problems.append(f"{where}: entry must be an object")
            continue
        lemma, pos = entry.get("lemma"), entry.get("pos")
        if not isinstance(lemma, str) or not lemma:
            problems.append(f"{where}: missing lemma")
        if pos not in _POS_NAMES:
            problems.append(f"{where}: pos must be one of {', '.join(sorted(_POS_NAMES))}")
        if (lemma, pos) in seen_entries:
            problems.append(f"{where}: duplicate entry {lemma}/{pos} (first at entries[{seen_entries[(lemma, pos)]}])")
        seen_entries.setdefault((lemma, pos), i)
        senses = entry.get("senses")
        if not isinstance(senses, list) or not senses:
            problems.append(f"{where}: at least one sense is required")
            continue

        ranks: dict[int, int] = {}
        for j, sense in enumerate(senses):
            swhere = f"{where}.senses[{j}]"
            problems.extend(_check_sense(swhere, sense, normalizer))
            if not isinstance(sense, dict):
                continue
            rank = sense.get("rank")
            if isinstance(rank, int) and not isinstance(rank, bool):
                if rank in ranks:
                    problems.append(f"{swhere}: duplicate rank {rank}")
                ranks.setdefault(rank, j)
            key = sense.get("sense_key")
            if isinstance(key, str) and key:
                if key in seen_keys:
                    problems.append(f"{swhere}: sense_key '{key}' already used at {seen_keys[key]}")
                seen_keys.setdefault(key, swhere)
                for hyponym in sense.get("hyponyms", []) if isinstance(sense.get("hyponyms"), list) else []:
                    hyponym_refs.append((swhere, hyponym))
        if ranks and len(ranks) == len(senses) and sorted(ranks) != list(range(1, len(senses) + 1)):
            problems.append(f"{where}: ranks must be 1..{len(senses)} without gaps, got {sorted(ranks)}")
        dict_senses = [s for s in senses if isinstance(s, dict)]
        problems.extend(_check_frequencies(where, dict_senses))

    for swhere, hyponym in hyponym_refs:
        if hyponym not in seen_keys:
            problems.append(f"{swhere}: unknown hyponym key '{hyponym}'")
    return problems


def _rel_freqs(senses: list[dict]) -> list[float]:
    if all("rel_freq" in s for s in senses):
        values = [float(s["rel_freq"]) for s in senses]
    else:
        counts = [int(s.get("count", 0)) for s in senses]
        total = sum(counts)
        values = [c / total for c in counts] if total else [0.0] * len(senses)
    if not any(values):
        values = [1.0 / len(senses)] * len(senses)
    return values


def lexicon_from_data(
    data: Any,
    normalizer: Optional[Normalizer] = None,
    source: str = "<lexicon>",
    multiword_allow: Optional[set[str]] = None,
    inflections: Optional[dict[str, set[str]]] = None,
) -> Lexicon:
    """Build a validated `Lexicon` from parsed JSON.

    Args:
        data (Any): Parsed lexicon file.
        normalizer (Normalizer, optional): Gloss normalization.
        source (str): Name used in error messages.
        multiword_allow (set[str], optional): Multiword lemmas to index; all of them when None.
        inflections (dict[str, set[str]], optional): Surface to base forms for multiword matching.

    Raises:
        LexiconError: Any invariant violation, with every problem listed.
    """
    normalizer = normalizer or _default_normalizer()
    problems = validate_lexicon_data(data, normalizer)
    if problems:
        for problem in problems:
            logger.error(f"{source}: {problem}", exc_info=False)
        raise LexiconError(problems, source)

    entries = []
    for raw in data["entries"]:
        senses = sorted(raw["senses"], key=lambda s: s["rank"])
        freqs = _rel_freqs(senses)
        entries.append(LexiconEntry(
            lemma=raw["lemma"],
            pos=PosTag(raw["pos"]),
            senses=tuple(
                SenseEntry(
                    sense_key=s["sense_key"],
                    rank=s["rank"],
                    gloss=_gloss(s, normalizer),
                    rel_freq=f,
                    hyponym_keys=tuple(s.get("hyponyms", [])),
                    example_vectors=_examples(s, normalizer),
                    gloss_text=s.get("gloss"),
                    examples_text=tuple(s["examples"]) if "examples" in s else None,
                )
                for s, f in zip(senses, freqs)
            ),
        ))

    index = MultiwordIndex(inflections)
    for entry in entries:
        if "_" not in entry.lemma or (multiword_allow is not None and entry.lemma not in multiword_allow):
            continue
        components = normalizer.normalize_text(" ".join(part for part in entry.lemma.split("_") if part))
        if len(components) >= 2:
            index.add(components, (s.sense_key for s in entry.senses))
    logger.debug(f"{source}: {len(entries)} entries, {len(index)} multiwords indexed")
    return Lexicon(entries, data.get("provenance"), index)


def load_lexicon(
    file_path: str | Path,
    normalizer: Optional[Normalizer] = None,
    multiword_allow: Optional[set[str]] = None,
    inflections: Optional[dict[str, set[str]]] = None,
) -> Lexicon:
    """Load and validate a lexicon file.

    Raises:
        JsonLoadError: The file is not valid JSON (line and column given).
        LexiconError: Invariant violations, located by entry.

    Example:
        >>> lex = load_lexicon("tests/fixtures/toy/lexicon.json")
        >>> [s.rel_freq for s in lex.lookup("bank").senses]
        [0.6, 0.4]
    """
    data = j_loads(Path(file_path))
    return lexicon_from_data(data, normalizer, str(file_path), multiword_allow, inflections)


def lexicon_to_data(lex: Lexicon) -> dict:
    """Interchange form of a lexicon: source gloss text kept, rel_freq explicit."""
    entries = []
    for entry in lex.entries:
        senses = []
        for s in entry.senses:
            item: dict[str, Any] = {"sense_key": s.sense_key, "rank": s.rank, "rel_freq": s.rel_freq}
            if s.gloss_text is not None:
                item["gloss"] = s.gloss_text
            else:
                item["gloss_tokens"] = list(s.gloss)
            if s.hyponym_keys:
                item["hyponyms"] = list(s.hyponym_keys)
            if s.examples_text is not None:
                item["examples"] = list(s.examples_text)
            elif s.example_vectors:
                item["example_tokens"] = [list(v) for v in s.example_vectors]
            senses.append(item)
        entries.append({"lemma": entry.lemma, "pos": entry.pos.value, "senses": senses})
    data: dict[str, Any] = {"entries": entries}
    if lex.provenance is not None:
        data["provenance"] = lex.provenance
    return data


def dump_lexicon(lex: Lexicon, file_path: str | Path) -> Path:
    """Write a lexicon back to the interchange format; loading the result gives an equal lexicon."""
    path = Path(file_path)
    j_dumps(lexicon_to_data(lex), path)
    return path
