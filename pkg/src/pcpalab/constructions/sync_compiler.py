"""Compile a synchronous centralized returning PCPA into a k-head sensing PDA.

Without epsilon reads every component has consumed exactly t symbols after t
internal steps, so a component's input head doubles as its clock. Head 1
replays component 1 on the main stack. Components 2..k are replayed lazily:
when component 1 exposes K_j, component j is run from its last synchronization
point (where its stack was just its bottom, by returning mode) on top of the
main stack until head j meets head 1. The replayed segment uses tagged symbols
(``r.X`` inside, ``b.X`` for the segment bottom) so the replay can never reach
below its own bottom; component 1 reads tagged symbols as their plain
counterparts, which turns the finished segment into the copied stack. Once head
1 reaches the end-marker in a final state, components 2..k are replayed to the
end-marker in turn and must finish in final states.
"""
from __future__ import annotations

from collections import deque

from ..mhpda import EQ, NE, MhpdaSpec, MhTransition
from ..pcpa import InvalidMachine, PcpaSpec, validate
from .rm_compiler import CompilationMap

END = "$"
BOTTOM = "bot."


def _rep(x):
    return "r." + x


def _segbot(x):
    return "b." + x


def _untag(x):
    return x[2:] if x.startswith(("r.", "b.")) else x


def compile_sync_pcpa_to_mhpda(spec: PcpaSpec):
    """Return ``(MhpdaSpec, CompilationMap)``; raises on epsilon reads or invalid specs."""
    problems = validate(spec)
    eps = [
        f"component {i}: {t.source} reads epsilon"
        for i, comp in enumerate(spec.components, start=1)
        for t in comp.transitions
        if t.read is None
    ]
    if problems or eps:
        raise InvalidMachine(problems + eps)
    k = spec.degree
    delta = sorted(spec.stack_alphabet)
    queries = spec.query_index
    for x in delta:
        if x.startswith(("r.", "b.")) or x == BOTTOM or END == x:
            raise InvalidMachine([f"stack symbol {x} collides with tagging"])
    host = delta + [_rep(x) for x in delta] + [_segbot(x) for x in delta] + [BOTTOM]
    tagged = [_rep(x) for x in delta] + [_segbot(x) for x in delta]
    comps = spec.components

    rows = []
    finals = set()
    cmap = CompilationMap()
    seen = set()
    work = deque()

    def name(st):
        if st[0] in ("init", "acc"):
            return st[0]
        parts = [str(p) if not isinstance(p, tuple) else ",".join(p) for p in st]
        return "|".join(parts)

    def state(st):
        if st not in seen:
            seen.add(st)
            work.append(st)
            role = {"init": "init", "c1": "simulate-1", "rep": "replay",
                    "end": "final-check", "erep": "final-replay", "acc": "accept"}[st[0]]
            ann = {"role": role}
            if st[0] in ("rep", "end", "erep"):
                ann["component"] = st[1]
            cmap.annotations[name(st)] = ann
        return name(st)

    def add(src, scanned, top, dst, moves, push, guard=frozenset()):
        rows.append(MhTransition(name(src), scanned, top, state(dst), moves, push, guard))

    def head(j, sym):
        scanned = [None] * k
        scanned[j - 1] = sym
        return tuple(scanned)

    def step(j):
        moves = [0] * k
        moves[j - 1] = 1
        return tuple(moves)

    stay = (0,) * k

    def replay_rows(src, j, others, dst_of, guard):
        comp = comps[j - 1]
        sj = others[j - 2]
        for top in tagged:
            base = _untag(top)
            for t in comp.table.get((sj, base), ()):
                if top.startswith("b."):
                    if not t.push:
                        continue
                    push = tuple(_rep(x) for x in t.push[:-1]) + (_segbot(t.push[-1]),)
                else:
                    push = tuple(_rep(x) for x in t.push)
                new_others = others[: j - 2] + (t.target,) + others[j - 1:]
                add(src, head(j, t.read), top, dst_of(new_others), step(j), push, guard)

    start = ("init",)
    state(start)
    while work:
        st = work.popleft()
        kind = st[0]
        if kind == "init":
            add(st, (None,) * k, BOTTOM,
                ("c1", comps[0].initial, tuple(c.initial for c in comps[1:])),
                stay, (comps[0].bottom, BOTTOM))
        elif kind == "c1":
            _, s1, others = st
            for top in host:
                base = _untag(top)
                if top == BOTTOM:
                    pass
                elif base in queries:
                    j = queries[base] + 1
                    if top == base and j >= 2:
                        add(st, (None,) * k, top, ("rep", j, s1, others), stay,
                            (_segbot(comps[j - 1].bottom),))
                else:
                    for t in comps[0].table.get((s1, base), ()):
                        add(st, head(1, t.read), top, ("c1", t.target, others), step(1), t.push)
                if s1 in comps[0].finals:
                    dst = ("end", 2, others) if k >= 2 else ("acc",)
                    add(st, head(1, END), top, dst, stay, (top,))
        elif kind == "rep":
            _, j, s1, others = st
            for top in host:
                add(st, (None,) * k, top, ("c1", s1, others), stay, (top,),
                    frozenset({(1, j, EQ)}))
            replay_rows(st, j, others, lambda o: ("rep", j, s1, o), frozenset({(1, j, NE)}))
        elif kind == "end":
            _, j, others = st
            for top in host:
                add(st, (None,) * k, top, ("erep", j, others), stay,
                    (_segbot(comps[j - 1].bottom), top))
        elif kind == "erep":
            _, j, others = st
            replay_rows(st, j, others, lambda o: ("erep", j, o), frozenset())
            if others[j - 2] in comps[j - 1].finals:
                dst = ("end", j + 1, others) if j < k else ("acc",)
                for top in host:
                    add(st, head(j, END), top, dst, stay, (top,))
        elif kind == "acc":
            finals.add("acc")

    out = MhpdaSpec(
        states={name(s) for s in seen},
        input_alphabet=spec.input_alphabet,
        end_marker=END,
        stack_alphabet=set(host),
        heads=k,
        sensing=True,
        transitions=tuple(rows),
        initial="init",
        bottom=BOTTOM,
        finals=finals,
        name=f"mh:{spec.name}" if spec.name else "mh",
    )
    return out, cmap
