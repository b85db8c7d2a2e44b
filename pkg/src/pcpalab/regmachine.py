"""One-register machines over a one-way input tape.

The register holds a positive integer, starts at 1, and is changed only by
multiplication by 2 or 3 and by division by 2 or 3 when the remainder is zero.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Union

from .pcpa import InvalidMachine
from .search import as_word

ACCEPTED = "accepted"
REJECTED = "rejected"
TIMEOUT = "timeout"


@dataclass(frozen=True)
class Read:
    branch: dict  # input symbol -> label
    at_end: str


@dataclass(frozen=True)
class Mul:
    c: int
    next: str


@dataclass(frozen=True)
class DivMod:
    c: int
    branch: tuple  # remainder r -> label


@dataclass(frozen=True)
class Accept:
    pass


@dataclass(frozen=True)
class Reject:
    pass


Instruction = Union[Read, Mul, DivMod, Accept, Reject]


@dataclass(frozen=True)
class RmProgram:
    instructions: dict
    entry: str
    input_alphabet: frozenset
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "input_alphabet", frozenset(self.input_alphabet))


class RmState(NamedTuple):
    pc: str
    register: int
    consumed: int


def targets(ins: Instruction) -> list:
    if isinstance(ins, Read):
        return list(ins.branch.values()) + [ins.at_end]
    if isinstance(ins, Mul):
        return [ins.next]
    if isinstance(ins, DivMod):
        return list(ins.branch)
    return []


def validate(prog: RmProgram) -> list[str]:
    v = []
    if prog.entry not in prog.instructions:
        v.append(f"entry label {prog.entry} does not exist")
    for label, ins in prog.instructions.items():
        if isinstance(ins, (Mul, DivMod)) and ins.c not in (2, 3):
            v.append(f"{label}: factor must be 2 or 3, got {ins.c}")
        if isinstance(ins, DivMod) and len(ins.branch) != ins.c:
            v.append(f"{label}: DIVMOD {ins.c} needs {ins.c} remainder branches")
        if isinstance(ins, Read):
            for sym in ins.branch:
                if sym not in prog.input_alphabet:
                    v.append(f"{label}: branch on {sym} outside the input alphabet")
        for dest in targets(ins):
            if dest not in prog.instructions:
                v.append(f"{label}: branch target {dest} does not exist")
    return v


def require_valid(prog: RmProgram) -> None:
    problems = validate(prog)
    if problems:
        raise InvalidMachine(problems)


def step(prog: RmProgram, word, s: RmState) -> Union[RmState, str]:
    """One instruction; returns the next state or a halt status."""
    word = as_word(word)
    ins = prog.instructions[s.pc]
    if isinstance(ins, Read):
        if s.consumed == len(word):
            return RmState(ins.at_end, s.register, s.consumed)
        dest = ins.branch.get(word[s.consumed])
        if dest is None:
            return REJECTED
        return RmState(dest, s.register, s.consumed + 1)
    if isinstance(ins, Mul):
        return RmState(ins.next, s.register * ins.c, s.consumed)
    if isinstance(ins, DivMod):
        r = s.register % ins.c
        reg = s.register // ins.c if r == 0 else s.register
        return RmState(ins.branch[r], reg, s.consumed)
    if isinstance(ins, Accept):
        return ACCEPTED if s.consumed == len(word) else REJECTED
    return REJECTED


@dataclass
class RmRun:
    status: str
    states: list

    @property
    def accepted(self) -> bool:
        return self.status == ACCEPTED


def run(prog: RmProgram, word, max_steps: int = 100_000) -> RmRun:
    word = as_word(word)
    s = RmState(prog.entry, 1, 0)
    states = [s]
    for _ in range(max_steps):
        nxt = step(prog, word, s)
        if isinstance(nxt, str):
            return RmRun(nxt, states)
        s = nxt
        states.append(s)
    return RmRun(TIMEOUT, states)
