"""Two-head nondeterministic PDA for { u v u^R v^R u^R : |u| = |v| >= 1 }.

Phases, by state prefix:

``push``   head 1 pushes a nonempty prefix x of the input and stops at a guessed cell.
``count``  head 2 walks from the left end pushing one counter C per cell, stopping
           at a guessed cell.
``cmp``    both heads advance together comparing symbols; every joint step pops
           four counters (``cmp`` pops one while moving, ``cmp1``..``cmp3`` pop the
           other three). A missing counter in ``cmp1``..``cmp3`` means the count was
           not divisible by 4 and the branch dies; so does a head hitting the
           end-marker early or a symbol mismatch.
``chk``    counters exhausted: head 2 must sit on the end-marker.
``match``  the stored prefix is popped against the rest of the input under head 1.
``acc``    reached only from the bottom symbol with head 1 on the end-marker.
"""
from ..mhpda import MhpdaSpec, MhTransition

SIGMA = ("a", "b")
END = "$"


def build_otto_acceptor() -> MhpdaSpec:
    rows = []

    def add(src, scanned, top, dst, moves, push):
        rows.append(MhTransition(src, scanned, top, dst, moves, push))

    tops = SIGMA + ("Z",)
    for x in SIGMA:
        for t in tops:
            add("push0", (x, None), t, "push", (1, 0), (x, t))
            add("push", (x, None), t, "push", (1, 0), (x, t))
    for t in SIGMA:
        add("push", (None, None), t, "count", (0, 0), (t,))
    for t in SIGMA + ("C",):
        for y in SIGMA:
            add("count", (None, y), t, "count", (0, 1), ("C", t))
    add("count", (None, None), "C", "cmp", (0, 0), ("C",))
    for x in SIGMA:
        add("cmp", (x, x), "C", "cmp1", (1, 1), ())
    add("cmp1", (None, None), "C", "cmp2", (0, 0), ())
    add("cmp2", (None, None), "C", "cmp3", (0, 0), ())
    add("cmp3", (None, None), "C", "cmp", (0, 0), ())
    for t in SIGMA:
        add("cmp", (None, END), t, "match", (0, 0), (t,))
    for x in SIGMA:
        add("match", (x, None), x, "match", (1, 0), ())
    add("match", (END, None), "Z", "acc", (0, 0), ("Z",))

    states = {"push0", "push", "count", "cmp", "cmp1", "cmp2", "cmp3", "match", "acc"}
    return MhpdaSpec(
        states=states,
        input_alphabet=set(SIGMA),
        end_marker=END,
        stack_alphabet={"a", "b", "C", "Z"},
        heads=2,
        sensing=False,
        transitions=tuple(rows),
        initial="push0",
        bottom="Z",
        finals={"acc"},
        name="otto-2head",
    )


def head_stops(trace) -> tuple:
    """Cells passed by heads 1 and 2 when they stopped, read off an accepting witness.

    Head 1 stops when the machine leaves the ``push`` phase, head 2 when it leaves
    ``count``.
    """
    stop1 = stop2 = None
    configs = trace.configs
    for prev, cur in zip(configs, configs[1:]):
        if prev.state == "push" and cur.state == "count":
            stop1 = cur.positions[0] - 1
        if prev.state == "count" and cur.state == "cmp":
            stop2 = cur.positions[1] - 1
    return stop1, stop2
