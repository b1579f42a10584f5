## \file relwsd/cascade/runner.py
# -*- coding: utf-8 -*-
"""
Running cascades.

Every instance is offered to the first step; a step that abstains passes it
on to the next one, and the first answer is final. Instances are
independent, so a run can use a thread pool; results come back in instance
order either way.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Optional, Sequence

from relwsd.cascade.dsl import CascadeSpec
from relwsd.cascade.heuristics import HEURISTICS, CascadeContext, resolve_params
from relwsd.cascade.instance import DisambiguationInstance
from relwsd.cascade.verdict import CascadeResult, TraceStep, Verdict
from relwsd.logger import logger
from relwsd.logger.exceptions import UsageError

UNKNOWN_LEMMA = "unknown"


def check_resources(spec: CascadeSpec, ctx: CascadeContext) -> None:
    """Fail before any instance is processed when a step needs a matrix the run lacks."""
    for step in spec.steps:
        definition = HEURISTICS[step.name]
        if definition.needs_matrix(resolve_params(step.name, step.params, ctx.config)):
            ctx.relevance(step.name)


def run_cascade(spec: CascadeSpec, inst: DisambiguationInstance, ctx: CascadeContext) -> CascadeResult:
    """Run one instance through the cascade.

    Args:
        spec (CascadeSpec): Steps in order.
        inst (DisambiguationInstance): The instance.
        ctx (CascadeContext): Lexicon, matrix, configuration and caches.

    Returns:
        CascadeResult: Final verdict and the trace of the evaluated steps.
    """
    if not spec.steps:
        raise UsageError("empty cascade")
    entry = ctx.lexicon.lookup(inst.lemma, inst.pos)
    if entry is None:
        verdict = Verdict.abstain(UNKNOWN_LEMMA)
        note = f"lemma '{inst.lemma}' is not in the lexicon"
        logger.debug(f"{inst.instance_id}: {note}")
        return CascadeResult(verdict, [TraceStep(-1, UNKNOWN_LEMMA, verdict, note=note)])

    trace: list[TraceStep] = []
    for i, step in enumerate(spec.steps):
        params = resolve_params(step.name, step.params, ctx.config)
        verdict, scores = HEURISTICS[step.name].fn(inst, entry, ctx, params, step.name)
        trace.append(TraceStep(i, step.name, verdict, scores))
        if verdict.answered:
            return CascadeResult(verdict, trace)
    return CascadeResult(Verdict.abstain(spec.steps[-1].name), trace)


def run_all(
    spec: CascadeSpec,
    instances: Sequence[DisambiguationInstance],
    ctx: CascadeContext,
    jobs: int = 1,
) -> list[CascadeResult]:
    """`run_cascade` over many instances, in threads when `jobs > 1`."""
    check_resources(spec, ctx)
    if jobs <= 1:
        results = [run_cascade(spec, inst, ctx) for inst in instances]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            results = list(executor.map(lambda inst: run_cascade(spec, inst, ctx), instances))
    answered = sum(1 for r in results if r.verdict.answered)
    logger.info(f"Cascade answered {answered} of {len(results)} instances")
    return results


def run_cascades(
    specs: dict[str, CascadeSpec],
    instances: Sequence[DisambiguationInstance],
    ctx: CascadeContext,
    jobs: int = 1,
) -> dict[str, list[CascadeResult]]:
    """Run several named cascades over the same instances; the caches are shared between them."""
    for spec in specs.values():
        check_resources(spec, ctx)
    if jobs <= 1 or len(specs) == 1:
        return {name: run_all(spec, instances, ctx, jobs) for name, spec in specs.items()}
    with ThreadPoolExecutor(max_workers=min(jobs, len(specs))) as executor:
        futures = {name: executor.submit(run_all, spec, instances, ctx) for name, spec in specs.items()}
        return {name: future.result() for name, future in futures.items()}


def answers_of(instances: Iterable[DisambiguationInstance], results: Iterable[CascadeResult]) -> list[tuple[str, str, str]]:
    """`(instance_id, sense_key, heuristic)` for every answered instance, in instance order."""
    return [
        (inst.instance_id, result.verdict.sense_key, result.verdict.heuristic_name)
        for inst, result in zip(instances, results)
        if result.verdict.answered
    ]


def format_trace(inst: DisambiguationInstance, result: CascadeResult, total_steps: Optional[int] = None) -> list[str]:
    """Readable trace lines; steps after the answering one are marked as not evaluated."""
    lines = [f"{inst.instance_id} ({inst.lemma}):"]
    lines.extend(f"  {step.describe()}" for step in result.trace)
    if total_steps is not None and result.trace and result.trace[-1].index >= 0:
        for i in range(len(result.trace), total_steps):
            lines.append(f"  {i + 1}. not evaluated")
    return lines
