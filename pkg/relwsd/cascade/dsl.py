## \file relwsd/cascade/dsl.py
# -*- coding: utf-8 -*-
"""
The cascade language.

One step per line, a heuristic name followed by `key=value` parameters;
`#` starts a comment, blank lines are ignored:

    # lexical sample, all words
    monosemous
    statistical cutoff=0.10
    relevance_filter radius_noun=25 radius_adj=5 cutoff=0.10 max_senses=6
    first_sense

Names and parameters are checked against the heuristic registry while
parsing, so every error carries the line it was found on.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from lark import Lark, Token as LarkToken
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken

from relwsd.cascade.heuristics import HEURISTICS
from relwsd.logger import logger
from relwsd.logger.exceptions import CascadeSyntaxError

CASCADE_GRAMMAR = r"""
    start: _NL? (step (_NL step)* _NL?)?

    step: NAME param*
    param: NAME "=" VALUE

    NAME: /[a-z_][a-z0-9_]*/
    VALUE: /[^\s#=]+/
    COMMENT: /#[^\n]*/
    _NL: /(\r?\n[\t ]*(#[^\n]*)?)+/

    %ignore /[\t ]+/
    %ignore COMMENT
"""

parser = Lark(CASCADE_GRAMMAR, parser="lalr", propagate_positions=True)


@dataclass(frozen=True)
class Step:
    """One heuristic invocation; `params` holds only the parameters written in the program."""

    name: str
    params: dict[str, Any] = field(default_factory=dict)
    line: int = field(default=0, compare=False)

    def __hash__(self) -> int:
        return hash((self.name, tuple(sorted(self.params.items()))))


@dataclass(frozen=True)
class CascadeSpec:
    steps: tuple[Step, ...]

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def names(self) -> list[str]:
        return [s.name for s in self.steps]


def _step(tree) -> Step:
    name_token: LarkToken = tree.children[0]
    line = name_token.line
    name = str(name_token)
    definition = HEURISTICS.get(name)
    if definition is None:
        raise CascadeSyntaxError(
            f"unknown heuristic '{name}' (known: {', '.join(sorted(HEURISTICS))})", line, name_token.column
        )
    params: dict[str, Any] = {}
    for param in tree.children[1:]:
        key_token, value_token = param.children
        key = str(key_token)
        spec = definition.params.get(key)
        if spec is None:
            known = ", ".join(sorted(definition.params)) or "none"
            raise CascadeSyntaxError(f"'{name}' has no parameter '{key}' (known: {known})", key_token.line, key_token.column)
        if key in params:
            raise CascadeSyntaxError(f"parameter '{key}' given twice", key_token.line, key_token.column)
        try:
            params[key] = spec.parse(str(value_token))
        except ValueError as ex:
            raise CascadeSyntaxError(f"{name}.{key}: {ex}", value_token.line, value_token.column) from ex
    return Step(name, params, line)


def parse_cascade(text: str) -> CascadeSpec:
    """Parse a cascade program.

    Raises:
        CascadeSyntaxError: Syntax errors, unknown heuristics or parameters, bad values, empty programs.

    Example:
        >>> parse_cascade("monosemous\\nfirst_sense").names
        ['monosemous', 'first_sense']
    """
    try:
        tree = parser.parse(text if text.endswith("\n") or not text else text + "\n")
    except UnexpectedEOF as ex:
        raise CascadeSyntaxError("unexpected end of program", max(text.count("\n"), 1)) from ex
    except UnexpectedCharacters as ex:
        raise CascadeSyntaxError(f"unexpected character {text[ex.pos_in_stream]!r}", ex.line, ex.column) from ex
    except UnexpectedToken as ex:
        raise CascadeSyntaxError(f"unexpected {ex.token.type.lstrip('_').lower()} '{ex.token.strip()}'", ex.line, ex.column) from ex
    except UnexpectedInput as ex:
        raise CascadeSyntaxError(str(ex).splitlines()[0], ex.line, ex.column) from ex
    steps = tuple(_step(child) for child in tree.children)
    if not steps:
        raise CascadeSyntaxError("empty cascade: at least one step is required", 1)
    return CascadeSpec(steps)


def load_cascade(file_path: str | Path) -> CascadeSpec:
    path = Path(file_path)
    try:
        return parse_cascade(path.read_text(encoding="utf-8"))
    except CascadeSyntaxError as ex:
        logger.error(f"{path}: {ex}", exc_info=False)
        raise


def format_spec(spec: CascadeSpec) -> str:
    """Canonical program text; `parse_cascade(format_spec(s)) == s`."""
    lines = []
    for step in spec.steps:
        definition = HEURISTICS[step.name]
        parts = [step.name] + [f"{key}={definition.params[key].format(step.params[key])}" for key in sorted(step.params)]
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"
