## \file relwsd/cascade/verdict.py
# -*- coding: utf-8 -*-
"""Heuristic outcomes and cascade traces."""

from dataclasses import dataclass, field
from relwsd._compat import StrEnum
from typing import NamedTuple, Optional


class Outcome(StrEnum):
    ANSWER = "ANSWER"
    ABSTAIN = "ABSTAIN"


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    heuristic_name: str
    sense_key: Optional[str] = None
    score: Optional[float] = None

    @classmethod
    def answer(cls, heuristic_name: str, sense_key: str, score: float = 1.0) -> "Verdict":
        return cls(Outcome.ANSWER, heuristic_name, sense_key, score)

    @classmethod
    def abstain(cls, heuristic_name: str) -> "Verdict":
        return cls(Outcome.ABSTAIN, heuristic_name)

    @property
    def answered(self) -> bool:
        return self.outcome is Outcome.ANSWER


@dataclass(frozen=True)
class TraceStep:
    """One evaluated step; `scores` holds per-sense scores for the scoring heuristics."""

    index: int
    name: str
    verdict: Verdict
    scores: dict = field(default_factory=dict)
    note: str = ""

    def describe(self) -> str:
        head = f"{self.index + 1}. {self.name}: {self.verdict.outcome}"
        if self.verdict.answered:
            head += f" {self.verdict.sense_key} ({self.verdict.score:.6g})"
        if self.scores:
            head += " [" + ", ".join(f"{k}={v:.6g}" for k, v in self.scores.items()) + "]"
        if self.note:
            head += f" {self.note}"
        return head


class CascadeResult(NamedTuple):
    verdict: Verdict
    trace: list[TraceStep]

    @property
    def answered_by(self) -> Optional[int]:
        """Index of the answering step, `None` when every step abstained."""
        for step in self.trace:
            if step.verdict.answered:
                return step.index
        return None
