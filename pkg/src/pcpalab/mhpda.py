"""One-way multi-head pushdown automata with a right end-marker.

Heads are numbered from 1 and positions are 1-based indices into
``word + end_marker``; position ``n + 1`` scans the end-marker. A transition
names the symbol each head must scan (``None`` matches anything), an optional
coincidence guard over head pairs (sensing machines only), and the stack top.
Acceptance is by final state alone, wherever the heads are.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Optional

from .pcpa import InputAlphabetError, InvalidMachine
from .search import SearchBudget, Trace, Verdict, as_word, bfs_decide, follow_first, render_symbols

MOVE = "move"
EQ = "eq"
NE = "ne"


@dataclass(frozen=True)
class MhTransition:
    source: str
    scanned: tuple  # one entry per head; None is a wildcard
    top: str
    target: str
    moves: tuple  # per head: 1 advances, 0 stays
    push: tuple
    guard: frozenset = frozenset()  # {(i, j, "eq" | "ne")}, heads 1-based

    def __post_init__(self):
        object.__setattr__(self, "scanned", tuple(self.scanned))
        object.__setattr__(self, "moves", tuple(int(m) for m in self.moves))
        object.__setattr__(self, "push", tuple(self.push))
        object.__setattr__(self, "guard", frozenset(self.guard))


@dataclass(frozen=True)
class MhpdaSpec:
    states: frozenset
    input_alphabet: frozenset
    end_marker: str
    stack_alphabet: frozenset
    heads: int
    sensing: bool
    transitions: tuple
    initial: str
    bottom: str
    finals: frozenset
    name: str = field(default="", compare=False)

    def __post_init__(self):
        for attr in ("states", "input_alphabet", "stack_alphabet", "finals"):
            object.__setattr__(self, attr, frozenset(getattr(self, attr)))
        object.__setattr__(self, "transitions", tuple(self.transitions))

    @cached_property
    def table(self) -> dict:
        out: dict = {}
        for t in self.transitions:
            out.setdefault((t.source, t.top), []).append(t)
        return out


class MhConfiguration(NamedTuple):
    state: str
    positions: tuple
    stack: tuple


def validate(spec: MhpdaSpec) -> list[str]:
    v = []
    k = spec.heads
    if k < 1:
        v.append("at least one head is required")
    if spec.initial not in spec.states:
        v.append(f"initial state {spec.initial} not in states")
    for f in sorted(spec.finals - spec.states):
        v.append(f"final state {f} not in states")
    if spec.end_marker in spec.input_alphabet:
        v.append(f"end-marker {spec.end_marker} belongs to the input alphabet")
    if spec.bottom not in spec.stack_alphabet:
        v.append(f"bottom {spec.bottom} not in stack alphabet")
    tape = spec.input_alphabet | {spec.end_marker}
    for n, t in enumerate(spec.transitions):
        tw = f"transition {n} from {t.source}"
        if t.source not in spec.states or t.target not in spec.states:
            v.append(f"{tw}: endpoint not in states")
        if len(t.scanned) != k or len(t.moves) != k:
            v.append(f"{tw}: expected {k} scanned symbols and moves")
            continue
        for h, (sym, mv) in enumerate(zip(t.scanned, t.moves), start=1):
            if sym is not None and sym not in tape:
                v.append(f"{tw}: head {h} scans unknown symbol {sym}")
            if sym == spec.end_marker and mv:
                v.append(f"{tw}: head {h} advances past the end-marker")
            if mv not in (0, 1):
                v.append(f"{tw}: head {h} has invalid move {mv}")
        if t.guard and not spec.sensing:
            v.append(f"{tw}: coincidence guard on a non-sensing machine")
        for i, j, rel in t.guard:
            if not (1 <= i <= k and 1 <= j <= k) or i == j or rel not in (EQ, NE):
                v.append(f"{tw}: malformed guard ({i}, {j}, {rel})")
        if t.top not in spec.stack_alphabet:
            v.append(f"{tw}: top {t.top} not in stack alphabet")
        bad = [s for s in t.push if s not in spec.stack_alphabet]
        if bad:
            v.append(f"{tw}: pushes unknown symbols {bad}")
    return v


def require_valid(spec: MhpdaSpec) -> None:
    problems = validate(spec)
    if problems:
        raise InvalidMachine(problems)


def initial_configuration(spec: MhpdaSpec, word) -> MhConfiguration:
    word = as_word(word)
    bad = [a for a in word if a not in spec.input_alphabet]
    if bad:
        raise InputAlphabetError(f"symbols {sorted(set(bad))} not in input alphabet")
    return MhConfiguration(spec.initial, (1,) * spec.heads, (spec.bottom,))


def _guard_holds(guard, positions) -> bool:
    for i, j, rel in guard:
        same = positions[i - 1] == positions[j - 1]
        if same != (rel == EQ):
            return False
    return True


def successors(spec: MhpdaSpec, word, c: MhConfiguration) -> list:
    if not c.stack:
        return []
    tape = as_word(word) + (spec.end_marker,)
    end = len(tape)
    scanned = tuple(tape[p - 1] for p in c.positions)
    out = []
    seen = set()
    for t in spec.table.get((c.state, c.stack[0]), ()):
        ok = True
        for sym, want, mv, pos in zip(scanned, t.scanned, t.moves, c.positions):
            if (want is not None and want != sym) or (mv and pos >= end):
                ok = False
                break
        if not ok or (t.guard and not _guard_holds(t.guard, c.positions)):
            continue
        nxt = MhConfiguration(
            t.target,
            tuple(p + m for p, m in zip(c.positions, t.moves)),
            t.push + c.stack[1:],
        )
        if nxt not in seen:
            seen.add(nxt)
            out.append((nxt, MOVE))
    return out


def is_accepting(spec: MhpdaSpec, c: MhConfiguration) -> bool:
    return c.state in spec.finals


def decide(spec: MhpdaSpec, word, budget: Optional[SearchBudget] = None, on_expand=None) -> Verdict:
    require_valid(spec)
    word = as_word(word)
    budget = budget or SearchBudget.default_for(len(word))
    return bfs_decide(
        initial_configuration(spec, word),
        lambda c: successors(spec, word, c),
        lambda c: is_accepting(spec, c),
        budget,
        on_expand,
    )


def trace_run(spec: MhpdaSpec, word, max_steps: int = 10_000) -> Trace:
    require_valid(spec)
    word = as_word(word)
    return follow_first(
        initial_configuration(spec, word),
        lambda c: successors(spec, word, c),
        lambda c: is_accepting(spec, c),
        max_steps,
    )


def format_configuration(spec: MhpdaSpec, word, c: MhConfiguration) -> str:
    pos = "(" + ", ".join(map(str, c.positions)) + ")"
    return f"({c.state}, {pos}, {render_symbols(c.stack)})"


def format_trace(spec: MhpdaSpec, word, trace: Trace) -> str:
    return "".join(format_configuration(spec, word, c) + "\n" for c in trace.configs)
