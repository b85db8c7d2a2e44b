"""Compile a one-register machine into a centralized returning PCPA of degree 2.

Component 2 is a free-running clock with six states; it pushes one counter C
each time its phase wraps from 5 to 0. Component 1 keeps the register in unary
(C^R above the bottom Z) and, since both components always step together,
carries the clock phase in its own control.

Every MUL/DIVMOD starts with a reset: component 1 queries component 2, throws
the received counters away and queries again, until only the clock's bottom
symbol arrives. From that moment component 1 knows the clock is empty and its
phase. It then drains its register with a loop of 6c steps per counter (MUL c)
or 6/c steps per counter (DIVMOD c), replaces its bottom with K2 and receives
the clock's stack, which now holds c*R (or R div c) counters plus a small
surplus accumulated during the non-loop steps. The surplus is known in the
finite control (``debt`` below) and popped right after the transfer. A DIVMOD
with nonzero remainder r multiplies back by c straight away (the clock was
emptied by the transfer, so no second reset is needed) and adds r.

PCPA have no end-marker, so a READ guesses end of input by an epsilon move and
commits to it (all later READs take their end branch). A wrong guess can never
accept because acceptance requires all input to be consumed. The clock offers
a reading and an epsilon variant of every step so that it can keep pace with
component 1.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from ..pcpa import COMMUNICATION, PcpaSpec, make_component, successors, initial_configuration, is_accepting
from ..regmachine import Accept, DivMod, Mul, Read, Reject, RmProgram, RmState, require_valid
from ..search import SearchBudget, as_word

CLOCK = 6
C, Z, K1, K2 = "C", "Z", "K1", "K2"


@dataclass
class CompilationMap:
    """Per generated state: which component, what role, and the source label."""

    annotations: dict = field(default_factory=dict)

    def __getitem__(self, state):
        return self.annotations[state]

    def __contains__(self, state):
        return state in self.annotations

    def boundary_label(self, state):
        ann = self.annotations.get(state)
        if ann and ann["role"] == "boundary":
            return ann["label"]
        return None

    def to_json(self) -> dict:
        return {str(k): v for k, v in self.annotations.items()}


def _name(st: tuple) -> str:
    return "|".join(":".join(map(str, x)) if isinstance(x, tuple) else str(x) for x in st)


def _tick(phase):
    return (phase + 1) % CLOCK, int(phase == CLOCK - 1)


class _Builder:
    def __init__(self, prog: RmProgram):
        self.prog = prog
        self.rows = []
        self.finals = set()
        self.cmap = CompilationMap()
        self.seen = set()
        self.work = deque()

    def state(self, st: tuple) -> str:
        n = _name(st)
        if st not in self.seen:
            self.seen.add(st)
            self.work.append(st)
            self.cmap.annotations[n] = self.annotate(st)
        return n

    def annotate(self, st):
        kind = st[0]
        ann = {"component": 1, "role": {
            "init": "init", "lab": "boundary", "rchk": "reset", "rgc": "reset",
            "drain": "drain", "pop": "adjust", "push": "adjust",
        }[kind]}
        if kind != "init":
            if kind in ("lab", "rchk", "rgc", "drain"):
                label = st[1]
            elif kind == "push":
                label = st[2]
            else:
                label = st[2][1]
            ann["label"] = label
            ann["instruction"] = type(self.prog.instructions[label]).__name__.upper()
        if kind == "drain":
            ann["stage"] = st[2]
        return ann

    def row(self, src, read, top, dst, push):
        self.rows.append((src, read, top, dst, list(push)))

    def after_pops(self, n, cont, phase, ended, debt):
        """State reached once ``n`` adjustment pops are done (may be zero)."""
        if n > 0:
            return ("pop", n, cont, phase, ended, debt)
        if cont[0] == "lab":
            return ("lab", cont[1], phase, ended)
        _, label, r = cont
        return ("drain", label, "remul", phase, ended, debt, r, 0)

    def build(self):
        self.state(("init",))
        while self.work:
            self.expand(self.work.popleft())
        return self

    def expand(self, st):
        kind = st[0]
        src = _name(st)
        if kind == "init":
            phase, _ = _tick(0)
            self.row(src, None, Z, self.state(("lab", self.prog.entry, phase, False)), [C, Z])
        elif kind == "lab":
            self.expand_boundary(st)
        elif kind == "rchk":
            _, label, phase, ended = st
            nph, wrap = _tick(phase)
            ins = self.prog.instructions[label]
            stage = "mul" if isinstance(ins, Mul) else "div"
            self.row(src, None, Z, self.state(("drain", label, stage, nph, ended, wrap, 0, 0)), [])
            self.row(src, None, C, self.state(("rgc", label, nph, ended)), [])
        elif kind == "rgc":
            _, label, phase, ended = st
            nph, _ = _tick(phase)
            self.row(src, None, C, self.state(("rgc", label, nph, ended)), [])
            self.row(src, None, Z, self.state(("rchk", label, nph, ended)), [K2])
        elif kind == "drain":
            self.expand_drain(st)
        elif kind == "pop":
            _, n, cont, phase, ended, debt = st
            nph, wrap = _tick(phase)
            self.row(src, None, C, self.state(self.after_pops(n - 1, cont, nph, ended, debt + wrap)), [])
        elif kind == "push":
            _, n, label, phase, ended = st
            nph, _ = _tick(phase)
            dst = self.state(("lab", label, nph, ended))
            for top in (C, Z):
                self.row(src, None, top, dst, [C] * n + [top])

    def expand_boundary(self, st):
        _, label, phase, ended = st
        src = _name(st)
        ins = self.prog.instructions[label]
        nph, _ = _tick(phase)
        if isinstance(ins, Accept):
            self.finals.add(src)
        elif isinstance(ins, Reject):
            pass
        elif isinstance(ins, Read):
            if not ended:
                for sym, dest in ins.branch.items():
                    self.row(src, sym, C, self.state(("lab", dest, nph, False)), [C])
            self.row(src, None, C, self.state(("lab", ins.at_end, nph, True)), [C])
        else:
            self.row(src, None, C, self.state(("rchk", label, nph, ended)), [K2, C])

    def expand_drain(self, st):
        _, label, stage, phase, ended, debt, j, w = st
        src = _name(st)
        ins = self.prog.instructions[label]
        c = ins.c
        loop = CLOCK * c if stage in ("mul", "remul") else CLOCK // c
        nph, wrap = _tick(phase)
        if not -3 * c <= debt <= 3 * c:
            raise AssertionError(f"unbounded surplus in {src}")
        if w > 0:
            dst = self.state(("drain", label, stage, nph, ended, debt + wrap, j, (w + 1) % loop))
            for top in (C, Z):
                self.row(src, None, top, dst, [top])
            return
        # pop one register counter
        if stage == "div":
            nj = (j + 1) % c
            ndebt = debt + wrap - (1 if nj == 0 else 0)
        else:
            nj = j
            ndebt = debt + wrap - c
        self.row(src, None, C, self.state(("drain", label, stage, nph, ended, ndebt, nj, 1 % loop)), [])
        # register exhausted: transfer the clock's stack
        surplus = debt + wrap
        if surplus < 0:
            raise AssertionError(f"negative surplus in {src}")
        if stage == "mul":
            dst = self.after_pops(surplus, ("lab", ins.next), nph, ended, 0)
        elif stage == "div":
            cont = ("lab", ins.branch[0]) if j == 0 else ("remul", label, j)
            dst = self.after_pops(surplus, cont, nph, ended, 0)
        else:
            net = j - surplus
            if net > 0:
                dst = ("push", net, ins.branch[j], nph, ended)
            else:
                dst = self.after_pops(-net, ("lab", ins.branch[j]), nph, ended, 0)
        self.row(src, None, Z, self.state(dst), [K2])


def compile_rm_to_pcpa(prog: RmProgram):
    """Return ``(PcpaSpec, CompilationMap)`` for a valid program."""
    require_valid(prog)
    b = _Builder(prog).build()
    alphabet = sorted(prog.input_alphabet)
    rows2 = []
    clock_states = [f"k{i}" for i in range(CLOCK)]
    for i, st in enumerate(clock_states):
        nxt = clock_states[(i + 1) % CLOCK]
        for top in (C, Z):
            push = [C, top] if i == CLOCK - 1 else [top]
            for read in alphabet + [None]:
                rows2.append((st, read, top, nxt, push))
        b.cmap.annotations[st] = {"component": 2, "role": "clock", "phase": i}
    names1 = sorted(_name(s) for s in b.seen)
    comp1 = make_component(names1, _name(("init",)), Z, b.finals, b.rows)
    comp2 = make_component(clock_states, "k0", Z, clock_states, rows2)
    spec = PcpaSpec(
        input_alphabet=set(alphabet),
        stack_alphabet={C, Z, K1, K2},
        components=(comp1, comp2),
        query_symbols=(K1, K2),
        name=f"rm:{prog.name}" if prog.name else "rm",
    )
    return spec, b.cmap


@dataclass
class InvariantReport:
    verdict: str
    boundaries: int = 0
    transfers: list = field(default_factory=list)  # successive reset transfer sizes
    violations: list = field(default_factory=list)


def check_invariants(prog: RmProgram, spec: PcpaSpec, cmap: CompilationMap, word,
                     budget: SearchBudget) -> InvariantReport:
    """Explore the compiled system with a register-machine shadow.

    At every arrival at an instruction boundary (component 1 in a boundary
    state, no query pending) the shadow takes one register-machine step, the
    reached label must match, and the counters on component 1's stack must
    equal the register. At every reset transfer the clock's counter load must
    shrink: ``g_next <= g // 6 + 1``, strictly decreasing once ``g >= 2``.
    """
    word = as_word(word)
    n = len(word)
    report = InvariantReport("rejected_exhaustive")
    start = (initial_configuration(spec, word), None, None)
    seen = {start}
    queue = deque([(start, 0)])
    truncated = False
    accepted = False
    while queue:
        (cfg, shadow, last_g), depth = queue.popleft()
        if is_accepting(spec, word, cfg):
            accepted = True
        succ = successors(spec, word, cfg)
        if depth >= budget.max_depth:
            truncated = truncated or bool(succ)
            continue
        for nxt, kind in succ:
            s1 = nxt.states[0]
            ann = cmap[s1]
            g = last_g
            if kind == COMMUNICATION and ann["role"] == "reset":
                load = cfg.stacks[1].count(C)
                if last_g is not None:
                    if load > last_g // CLOCK + 1 or (last_g >= 2 and load >= last_g):
                        report.violations.append(f"{''.join(word)}: reset load {last_g} -> {load}")
                    report.transfers.append((last_g, load))
                g = load
            new_shadow = shadow
            top = nxt.stacks[0][0] if nxt.stacks[0] else None
            arrived = ann["role"] == "boundary" and top not in spec.query_index and (
                kind == COMMUNICATION or s1 != cfg.states[0])
            if arrived:
                report.boundaries += 1
                expect = _shadow_step(prog, word, shadow, nxt.consumed[0])
                have = nxt.stacks[0].count(C)
                if expect is None or expect.pc != ann["label"] or expect.register != have:
                    report.violations.append(
                        f"{''.join(word)}: at {ann['label']} stack holds {have}, expected {expect}")
                new_shadow = RmState(ann["label"], have, nxt.consumed[0])
                g = None
            node = (nxt, new_shadow, g)
            if node in seen:
                continue
            if len(seen) >= budget.max_configs:
                report.verdict = "inconclusive_budget"
                return report
            seen.add(node)
            queue.append((node, depth + 1))
    if accepted:
        report.verdict = "accepted"
    elif truncated:
        report.verdict = "inconclusive_budget"
    return report


def _shadow_step(prog, word, shadow, consumed):
    if shadow is None:
        return RmState(prog.entry, 1, 0)
    ins = prog.instructions[shadow.pc]
    if isinstance(ins, Read):
        if consumed > shadow.consumed:
            dest = ins.branch.get(word[shadow.consumed])
            return None if dest is None else RmState(dest, shadow.register, consumed)
        return RmState(ins.at_end, shadow.register, consumed)
    if isinstance(ins, Mul):
        return RmState(ins.next, shadow.register * ins.c, consumed)
    if isinstance(ins, DivMod):
        r = shadow.register % ins.c
        reg = shadow.register // ins.c if r == 0 else shadow.register
        return RmState(ins.branch[r], reg, consumed)
    return None


def boundary_state(label: str, phase: int, ended: bool) -> str:
    """Name of component 1's state at the start of instruction ``label``."""
    return _name(("lab", label, phase, ended))
