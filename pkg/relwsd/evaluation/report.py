## \file relwsd/evaluation/report.py
# -*- coding: utf-8 -*-
"""
Scoring reports.

Each answered instance scores 1 when its key is among the gold keys and 0
otherwise. Precision divides the score by the attempted instances, recall by
all instances. The text table shows percentages to one decimal and the Score
column in hundredths of an item (a fully correct answer counts 100):

    Heuristic         Attempted  Score  Precision  Recall
    monosemous                1    100     100.0%   16.7%
    Total                     5    400      80.0%   66.7%
"""

from dataclasses import dataclass, field
from typing import Any, Iterable, Optional, Sequence

import pandas as pd

from relwsd.evaluation.gold import Answer, GoldStandard
from relwsd.jjson import j_dumps
from relwsd.logger.exceptions import GoldStandardError

UNDEFINED = "—"
SCORE_UNIT = 100


@dataclass(frozen=True)
class ReportRow:
    label: str
    attempted: int
    score: float
    total: int

    @property
    def precision(self) -> Optional[float]:
        return self.score / self.attempted if self.attempted else None

    @property
    def recall(self) -> float:
        return self.score / self.total if self.total else 0.0

    def to_dict(self) -> dict[str, Any]:
        return {
            "label": self.label,
            "attempted": self.attempted,
            "score": self.score,
            "precision": self.precision,
            "recall": self.recall,
        }

    def cells(self) -> list[str]:
        precision = self.precision
        return [
            self.label,
            str(self.attempted),
            format(self.score * SCORE_UNIT, ".10g"),
            UNDEFINED if precision is None else f"{precision * 100:.1f}%",
            f"{self.recall * 100:.1f}%",
        ]


def format_table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    """Left-aligned first column, right-aligned numbers, two spaces between columns."""
    table = [list(header)] + [list(r) for r in rows]
    widths = [max(len(r[i]) for r in table) for i in range(len(header))]
    lines = []
    for r in table:
        cells = [r[0].ljust(widths[0])] + [cell.rjust(w) for cell, w in zip(r[1:], widths[1:])]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


@dataclass
class EvalReport:
    """Per-heuristic rows plus the mandatory Total row."""

    rows: list[ReportRow]
    total: ReportRow
    total_instances: int
    label_header: str = "Heuristic"
    headers: tuple[str, ...] = field(default=("Attempted", "Score", "Precision", "Recall"), repr=False)

    def row(self, label: str) -> ReportRow:
        for r in self.rows + [self.total]:
            if r.label == label:
                return r
        raise KeyError(label)

    def to_text(self) -> str:
        return format_table((self.label_header,) + self.headers, [r.cells() for r in self.rows + [self.total]])

    def to_dict(self) -> dict[str, Any]:
        return {
            "rows": [r.to_dict() for r in self.rows],
            "total": self.total.to_dict(),
            "total_instances": self.total_instances,
        }

    def to_json(self) -> str:
        return j_dumps(self.to_dict())

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([r.to_dict() for r in self.rows + [self.total]]).set_index("label")


def score_answers(
    answers: Iterable[Answer],
    gold: GoldStandard,
    total_instances: Optional[int] = None,
    order: Optional[Sequence[str]] = None,
) -> EvalReport:
    """Score answers against the gold standard, grouped by the heuristic that gave them.

    Args:
        answers (Iterable[Answer]): At most one answer per instance.
        gold (GoldStandard): Acceptable keys per instance.
        total_instances (int, optional): Denominator of recall; defaults to the gold size.
        order (Sequence[str], optional): Row order (cascade step names); every listed
            heuristic gets a row, others follow in order of first appearance.

    Returns:
        EvalReport: Rows and Total.

    Raises:
        GoldStandardError: Answers for ids missing from the gold standard, or repeated answers.

    Example:
        >>> report = score_answers([Answer("i1", "k1", "first_sense")], {"i1": frozenset({"k1"}), "i2": frozenset({"k2"})})
        >>> report.total.precision, report.total.recall
        (1.0, 0.5)
    """
    answers = list(answers)
    total = len(gold) if total_instances is None else total_instances
    missing = sorted({a.instance_id for a in answers if a.instance_id not in gold})
    if missing:
        shown = ", ".join(missing[:10]) + (f" (+{len(missing) - 10} more)" if len(missing) > 10 else "")
        raise GoldStandardError(f"answers for instances missing from the gold standard: {shown}")
    seen: set[str] = set()
    for a in answers:
        if a.instance_id in seen:
            raise GoldStandardError(f"instance '{a.instance_id}' answered twice")
        seen.add(a.instance_id)
    if total < len(answers):
        raise GoldStandardError(f"{len(answers)} answers exceed the {total} instances")

    labels = list(dict.fromkeys(list(order or []) + [a.heuristic for a in answers]))
    attempted = {label: 0 for label in labels}
    scores = {label: 0.0 for label in labels}
    for a in answers:
        attempted[a.heuristic] += 1
        if a.sense_key in gold[a.instance_id]:
            scores[a.heuristic] += 1.0
    rows = [ReportRow(label, attempted[label], scores[label], total) for label in labels]
    total_row = ReportRow("Total", sum(attempted.values()), sum(scores.values()), total)
    return EvalReport(rows, total_row, total)


@dataclass
class ComparisonReport:
    """One row per system, each scored on its own (baselines included)."""

    rows: list[ReportRow]
    total_instances: int

    def row(self, label: str) -> ReportRow:
        for r in self.rows:
            if r.label == label:
                return r
        raise KeyError(label)

    def to_text(self) -> str:
        return format_table(("System", "Attempted", "Score", "Precision", "Recall"), [r.cells() for r in self.rows])

    def to_dict(self) -> dict[str, Any]:
        return {"rows": [r.to_dict() for r in self.rows], "total_instances": self.total_instances}

    def to_json(self) -> str:
        return j_dumps(self.to_dict())

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([r.to_dict() for r in self.rows]).set_index("label")


def compare_systems(systems: dict[str, Iterable[Answer]], gold: GoldStandard, total_instances: Optional[int] = None) -> ComparisonReport:
    """Score each system's answers as a whole, in the given system order."""
    total = len(gold) if total_instances is None else total_instances
    rows = []
    for name, answers in systems.items():
        report = score_answers(answers, gold, total)
        rows.append(ReportRow(name, report.total.attempted, report.total.score, total))
    return ComparisonReport(rows, total)
