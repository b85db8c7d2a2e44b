"""Centralized parallel communicating pushdown automata in returning mode.

A system of degree k runs k pushdown components over one shared input word.
Internal steps move every component at once; when some stack top is a query
symbol K_j, a communication step copies component j's whole stack in place of
the query symbol and resets component j to its bottom symbol.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Optional, Sequence

from .search import (
    SearchBudget,
    Trace,
    Verdict,
    as_word,
    bfs_decide,
    follow_first,
    render_symbols,
)

INTERNAL = "internal"
COMMUNICATION = "communication"


class InvalidMachine(ValueError):
    """Raised when an operation requires a valid machine description."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class InputAlphabetError(ValueError):
    pass


@dataclass(frozen=True)
class Transition:
    source: str
    read: Optional[str]  # None reads nothing (epsilon)
    top: str
    target: str
    push: tuple  # index 0 becomes the new top

    def __post_init__(self):
        object.__setattr__(self, "push", tuple(self.push))


@dataclass(frozen=True)
class ComponentSpec:
    states: frozenset
    transitions: tuple
    initial: str
    bottom: str
    finals: frozenset

    def __post_init__(self):
        object.__setattr__(self, "states", frozenset(self.states))
        object.__setattr__(self, "finals", frozenset(self.finals))
        object.__setattr__(self, "transitions", tuple(self.transitions))

    @cached_property
    def table(self) -> dict:
        # (state, top) -> transitions in declaration order
        out: dict = {}
        for t in self.transitions:
            out.setdefault((t.source, t.top), []).append(t)
        return out


@dataclass(frozen=True)
class PcpaSpec:
    input_alphabet: frozenset
    stack_alphabet: frozenset
    components: tuple
    query_symbols: tuple
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "input_alphabet", frozenset(self.input_alphabet))
        object.__setattr__(self, "stack_alphabet", frozenset(self.stack_alphabet))
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "query_symbols", tuple(self.query_symbols))

    @property
    def degree(self) -> int:
        return len(self.components)

    @cached_property
    def query_index(self) -> dict:
        """Map each query symbol to the 0-based index of the component it names."""
        return {k: j for j, k in enumerate(self.query_symbols)}


class Configuration(NamedTuple):
    states: tuple
    consumed: tuple
    stacks: tuple  # per component, top first


def validate(spec: PcpaSpec) -> list[str]:
    violations = []
    k = spec.degree
    if k < 1:
        violations.append("degree must be at least 1")
    for sym in spec.input_alphabet | spec.stack_alphabet:
        if not isinstance(sym, str) or not sym or any(ch.isspace() for ch in sym):
            violations.append(f"bad symbol name {sym!r}")
    if len(spec.query_symbols) != k:
        violations.append(f"expected {k} query symbols, got {len(spec.query_symbols)}")
    if len(set(spec.query_symbols)) != len(spec.query_symbols):
        violations.append("query symbols are not pairwise distinct")
    for q in spec.query_symbols:
        if q not in spec.stack_alphabet:
            violations.append(f"query symbol {q} not in stack alphabet")
    queries = set(spec.query_symbols)
    for i, comp in enumerate(spec.components, start=1):
        where = f"component {i}"
        if comp.initial not in comp.states:
            violations.append(f"{where}: initial state {comp.initial} not in states")
        for f in sorted(comp.finals - comp.states):
            violations.append(f"{where}: final state {f} not in states")
        if comp.bottom not in spec.stack_alphabet:
            violations.append(f"{where}: bottom {comp.bottom} not in stack alphabet")
        if comp.bottom in queries:
            violations.append(f"{where}: bottom symbol {comp.bottom} is a query symbol")
        for n, t in enumerate(comp.transitions):
            tw = f"{where}, transition {n} ({t.source}, {t.read or 'ε'}, {t.top})"
            if t.source not in comp.states or t.target not in comp.states:
                violations.append(f"{tw}: endpoint not in states")
            if t.read is not None and t.read not in spec.input_alphabet:
                violations.append(f"{tw}: reads {t.read} outside the input alphabet")
            if t.top not in spec.stack_alphabet:
                violations.append(f"{tw}: top {t.top} not in stack alphabet")
            bad = [s for s in t.push if s not in spec.stack_alphabet]
            if bad:
                violations.append(f"{tw}: pushes unknown symbols {bad}")
            pushed_queries = [s for s in t.push if s in queries]
            if i >= 2 and pushed_queries:
                violations.append(f"{tw}: not centralized, pushes query symbols {pushed_queries}")
            if i == 1 and k >= 1 and spec.query_symbols and spec.query_symbols[0] in t.push:
                violations.append(f"{tw}: component 1 pushes its own query symbol {spec.query_symbols[0]}")
    return violations


def require_valid(spec: PcpaSpec) -> None:
    problems = validate(spec)
    if problems:
        raise InvalidMachine(problems)


def initial_configuration(spec: PcpaSpec, word) -> Configuration:
    word = as_word(word)
    bad = [a for a in word if a not in spec.input_alphabet]
    if bad:
        raise InputAlphabetError(f"symbols {sorted(set(bad))} not in input alphabet")
    return Configuration(
        tuple(c.initial for c in spec.components),
        (0,) * spec.degree,
        tuple((c.bottom,) for c in spec.components),
    )


def _component_moves(comp: ComponentSpec, word: tuple, state, consumed, stack) -> list:
    if not stack:
        return []
    nxt = word[consumed] if consumed < len(word) else None
    moves = []
    for t in comp.table.get((state, stack[0]), ()):
        if t.read is None:
            moves.append((t.target, consumed, t.push + stack[1:]))
        elif t.read == nxt:
            moves.append((t.target, consumed + 1, t.push + stack[1:]))
    return moves


def communicate(spec: PcpaSpec, c: Configuration) -> Optional[Configuration]:
    """The communication successor, or None when no pending query resolves."""
    qidx = spec.query_index
    tops = [s[0] if s else None for s in c.stacks]
    stacks = list(c.stacks)
    sources = set()
    for i, top in enumerate(tops):
        j = qidx.get(top)
        if j is None or tops[j] in qidx or not c.stacks[j]:
            continue
        stacks[i] = c.stacks[j] + c.stacks[i][1:]
        sources.add(j)
    if not sources:
        return None
    for j in sources:
        stacks[j] = (spec.components[j].bottom,)
    return Configuration(c.states, c.consumed, tuple(stacks))


def successors(spec: PcpaSpec, word, c: Configuration) -> list:
    """All ``(configuration, step_kind)`` successors, in deterministic order."""
    word = as_word(word)
    qidx = spec.query_index
    if any(s and s[0] in qidx for s in c.stacks):
        nxt = communicate(spec, c)
        return [] if nxt is None else [(nxt, COMMUNICATION)]
    per_component = []
    for comp, state, consumed, stack in zip(spec.components, c.states, c.consumed, c.stacks):
        moves = _component_moves(comp, word, state, consumed, stack)
        if not moves:
            return []
        per_component.append(moves)
    out = []
    seen = set()
    for combo in itertools.product(*per_component):
        cfg = Configuration(
            tuple(m[0] for m in combo),
            tuple(m[1] for m in combo),
            tuple(m[2] for m in combo),
        )
        if cfg not in seen:
            seen.add(cfg)
            out.append((cfg, INTERNAL))
    return out


def is_accepting(spec: PcpaSpec, word, c: Configuration) -> bool:
    n = len(as_word(word))
    return all(x == n for x in c.consumed) and all(
        s in comp.finals for s, comp in zip(c.states, spec.components)
    )


def decide(spec: PcpaSpec, word, budget: Optional[SearchBudget] = None, on_expand=None) -> Verdict:
    require_valid(spec)
    word = as_word(word)
    budget = budget or SearchBudget.default_for(len(word))
    start = initial_configuration(spec, word)
    return bfs_decide(
        start,
        lambda c: successors(spec, word, c),
        lambda c: is_accepting(spec, word, c),
        budget,
        on_expand,
    )


def trace_run(spec: PcpaSpec, word, max_steps: int = 10_000) -> Trace:
    """Deterministic replay taking the first successor (component order, then
    transition declaration order) at every configuration."""
    require_valid(spec)
    word = as_word(word)
    return follow_first(
        initial_configuration(spec, word),
        lambda c: successors(spec, word, c),
        lambda c: is_accepting(spec, word, c),
        max_steps,
    )


def format_configuration(spec: PcpaSpec, word, c: Configuration) -> str:
    word = as_word(word)
    parts = []
    for state, consumed, stack in zip(c.states, c.consumed, c.stacks):
        parts += [state, render_symbols(word[consumed:]), render_symbols(stack)]
    return "(" + ", ".join(parts) + ")"


def format_trace(spec: PcpaSpec, word, trace: Trace) -> str:
    return "".join(format_configuration(spec, word, c) + "\n" for c in trace.configs)


def make_component(states: Sequence[str], initial: str, bottom: str, finals, rows) -> ComponentSpec:
    """Build a component from ``(source, read, top, target, push)`` rows."""
    return ComponentSpec(
        frozenset(states),
        tuple(Transition(s, r, t, d, tuple(p)) for s, r, t, d, p in rows),
        initial,
        bottom,
        frozenset(finals),
    )
