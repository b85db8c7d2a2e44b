"""Bounded breadth-first decision engine shared by the machine models."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Optional

ACCEPTED = "accepted"
REJECTED = "rejected_exhaustive"
INCONCLUSIVE = "inconclusive_budget"


@dataclass(frozen=True)
class SearchBudget:
    max_depth: int = 10_000
    max_configs: int = 5_000_000

    def __post_init__(self):
        if self.max_depth <= 0 or self.max_configs <= 0:
            raise ValueError("budget limits must be positive")

    @classmethod
    def default_for(cls, word_length: int) -> "SearchBudget":
        return cls(max_depth=50 * (word_length + 1), max_configs=5_000_000)


@dataclass(frozen=True)
class TraceStep:
    config: Hashable
    kind: Optional[str]  # None for the initial configuration


@dataclass
class Trace:
    steps: list = field(default_factory=list)

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __getitem__(self, i):
        return self.steps[i]

    @property
    def configs(self) -> list:
        return [s.config for s in self.steps]

    @property
    def last(self):
        return self.steps[-1].config


@dataclass
class Verdict:
    status: str
    witness: Optional[Trace] = None
    explored: int = 0

    @property
    def accepted(self) -> bool:
        return self.status == ACCEPTED

    @property
    def rejected(self) -> bool:
        return self.status == REJECTED

    @property
    def inconclusive(self) -> bool:
        return self.status == INCONCLUSIVE

    def __str__(self):
        return self.status


Successors = Callable[[Hashable], Iterable[tuple]]


def bfs_decide(
    initial: Hashable,
    successors: Successors,
    is_accepting: Callable[[Hashable], bool],
    budget: SearchBudget,
    on_expand: Optional[Callable[[Hashable, list], None]] = None,
) -> Verdict:
    """Explore the step graph breadth-first with exact deduplication.

    ``successors`` yields ``(config, kind)`` pairs in a fixed order, so the
    result (including the witness) is deterministic. Acceptance is tested when
    a configuration is first discovered. ``on_expand`` sees every expanded
    configuration together with its successor list; tests use it to assert
    step-relation properties during a sweep.
    """
    parents: dict = {initial: None}
    if is_accepting(initial):
        return Verdict(ACCEPTED, _witness(parents, initial), 1)
    queue = deque([(initial, 0)])
    truncated = False
    while queue:
        config, depth = queue.popleft()
        succ = list(successors(config))
        if on_expand is not None:
            on_expand(config, succ)
        if depth >= budget.max_depth:
            if any(nxt not in parents for nxt, _ in succ):
                truncated = True
            continue
        for nxt, kind in succ:
            if nxt in parents:
                continue
            if len(parents) >= budget.max_configs:
                return Verdict(INCONCLUSIVE, None, len(parents))
            parents[nxt] = (config, kind)
            if is_accepting(nxt):
                return Verdict(ACCEPTED, _witness(parents, nxt), len(parents))
            queue.append((nxt, depth + 1))
    return Verdict(INCONCLUSIVE if truncated else REJECTED, None, len(parents))


def _witness(parents: dict, end) -> Trace:
    steps = []
    node = end
    while True:
        link = parents[node]
        if link is None:
            steps.append(TraceStep(node, None))
            break
        prev, kind = link
        steps.append(TraceStep(node, kind))
        node = prev
    steps.reverse()
    return Trace(steps)


def follow_first(
    initial: Hashable,
    successors: Successors,
    is_accepting: Callable[[Hashable], bool],
    max_steps: int,
) -> Trace:
    """Follow the first successor at every step (deterministic replay)."""
    trace = Trace([TraceStep(initial, None)])
    config = initial
    for _ in range(max_steps):
        if is_accepting(config):
            break
        succ = list(successors(config))
        if not succ:
            break
        config, kind = succ[0]
        trace.steps.append(TraceStep(config, kind))
    return trace


def render_symbols(symbols) -> str:
    """Concatenate symbol names; space-separate when any name is longer than one character."""
    symbols = tuple(symbols)
    if not symbols:
        return "ε"
    if all(len(s) == 1 for s in symbols):
        return "".join(symbols)
    return " ".join(symbols)


def as_word(word) -> tuple:
    """Normalize an input word: a plain string is split into characters,
    or on whitespace if it contains any."""
    if isinstance(word, str):
        return tuple(word.split()) if any(ch.isspace() for ch in word) else tuple(word)
    return tuple(word)
