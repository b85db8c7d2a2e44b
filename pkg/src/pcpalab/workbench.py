"""Enumeration, equivalence sweeps and golden-trace checks over any machine kind."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional, Union

from . import mhpda, pcpa, regmachine
from .constructions import build_power_of_two_pcpa
from .mhpda import MhpdaSpec
from .pcpa import PcpaSpec
from .regmachine import RmProgram
from .search import ACCEPTED, INCONCLUSIVE, REJECTED, SearchBudget, as_word, render_symbols

GOLDEN_TRACE = Path(__file__).parent / "data" / "power_of_two_a8.trace"

Oracle = Callable[[tuple], bool]
Decidable = Union[PcpaSpec, MhpdaSpec, RmProgram, Oracle]


def decide_word(machine: Decidable, word, budget: Optional[SearchBudget] = None, on_expand=None) -> str:
    """Verdict status for one word; oracles answer accepted/rejected_exhaustive."""
    word = as_word(word)
    if isinstance(machine, PcpaSpec):
        return pcpa.decide(machine, word, budget, on_expand).status
    if isinstance(machine, MhpdaSpec):
        return mhpda.decide(machine, word, budget, on_expand).status
    if isinstance(machine, RmProgram):
        steps = budget.max_depth if budget else 100_000
        status = regmachine.run(machine, word, steps).status
        return {regmachine.ACCEPTED: ACCEPTED, regmachine.REJECTED: REJECTED}.get(status, INCONCLUSIVE)
    return ACCEPTED if machine(word) else REJECTED


def words(alphabet, max_len: int):
    """All words up to ``max_len`` in length-lexicographic order."""
    symbols = sorted(alphabet)
    for n in range(max_len + 1):
        yield from itertools.product(symbols, repeat=n)


def _budget_for(budget, word):
    return budget if budget is not None else SearchBudget.default_for(len(word))


@dataclass
class Enumeration:
    accepted: list
    inconclusive: list


def enumerate_accepted(machine: Decidable, alphabet, max_len: int,
                       budget: Optional[SearchBudget] = None) -> Enumeration:
    acc, unknown = [], []
    for w in words(alphabet, max_len):
        status = decide_word(machine, w, _budget_for(budget, w))
        if status == ACCEPTED:
            acc.append(w)
        elif status == INCONCLUSIVE:
            unknown.append(w)
    return Enumeration(acc, unknown)


@dataclass
class EquivReport:
    status: str  # "pass" | "fail" | "inconclusive"
    alphabet: tuple
    max_len: int
    budget: Optional[SearchBudget]
    word: Optional[tuple] = None
    verdict_a: Optional[str] = None
    verdict_b: Optional[str] = None
    inconclusive: list = field(default_factory=list)
    checked: int = 0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def describe(self) -> str:
        if self.status == "fail":
            return f"fail at {render_symbols(self.word)!r}: {self.verdict_a} vs {self.verdict_b}"
        if self.status == "inconclusive":
            shown = ", ".join(render_symbols(w) for w in self.inconclusive[:5])
            return f"inconclusive on {len(self.inconclusive)} words ({shown})"
        return f"pass ({self.checked} words up to length {self.max_len})"


def equiv_check(a: Decidable, b: Decidable, alphabet, max_len: int,
                budget: Optional[SearchBudget] = None, on_expand=None) -> EquivReport:
    """Compare verdicts on every word up to ``max_len``; stops at the first divergence.

    Inconclusive verdicts on either side are collected and never counted as
    rejections.
    """
    report = EquivReport("pass", tuple(sorted(alphabet)), max_len, budget)
    for w in words(alphabet, max_len):
        bw = _budget_for(budget, w)
        va = decide_word(a, w, bw, on_expand)
        vb = decide_word(b, w, bw, on_expand)
        report.checked += 1
        if INCONCLUSIVE in (va, vb):
            report.inconclusive.append(w)
        elif va != vb:
            report.status = "fail"
            report.word, report.verdict_a, report.verdict_b = w, va, vb
            return report
    if report.inconclusive:
        report.status = "inconclusive"
    return report


@dataclass
class GoldenResult:
    ok: bool
    diff: str = ""


def render_power_of_two_trace(word="a" * 8) -> str:
    spec = build_power_of_two_pcpa()
    return pcpa.format_trace(spec, word, pcpa.trace_run(spec, word))


def golden_trace_check(path=GOLDEN_TRACE, word="a" * 8) -> GoldenResult:
    """Byte comparison of the power-of-two trace on ``word`` against a stored file."""
    expected = Path(path).read_bytes()
    actual = render_power_of_two_trace(word).encode("utf-8")
    if actual == expected:
        return GoldenResult(True)
    exp_lines = expected.decode("utf-8", errors="replace").splitlines()
    act_lines = actual.decode("utf-8").splitlines()
    for i, (e, a) in enumerate(itertools.zip_longest(exp_lines, act_lines, fillvalue="<missing>"), start=1):
        if e != a:
            return GoldenResult(False, f"line {i}:\n- {e}\n+ {a}")
    return GoldenResult(False, "files differ in whitespace or line endings")
