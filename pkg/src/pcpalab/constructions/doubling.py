"""Deterministic two-head sensing PDA for a^(2^n), n >= 1.

At every phase boundary both heads sit on the same cell T and the stack holds
T/2 counters. Draining the counters moves head 2 two cells per counter, to 2T;
head 1 then walks up to head 2 pushing one counter per cell, restoring the
boundary invariant at 2T. The word is accepted when the heads meet on the
end-marker. The bootstrap reads two cells and pushes one counter, so the first
boundary is T = 2.
"""
from ..mhpda import EQ, NE, MhpdaSpec, MhTransition

END = "$"


def build_doubling_sensing_pda() -> MhpdaSpec:
    meet = frozenset({(1, 2, EQ)})
    apart = frozenset({(1, 2, NE)})
    rows = [
        MhTransition("init", ("a", "a"), "Z", "boot", (1, 1), ("Z",)),
        MhTransition("boot", ("a", "a"), "Z", "bound", (1, 1), ("C", "Z")),
        # boundary: heads together, T/2 counters on the stack
        MhTransition("bound", (END, END), "C", "acc", (0, 0), ("C",)),
        MhTransition("bound", ("a", "a"), "C", "drain", (0, 0), ("C",)),
        # drain: pop one counter, head 2 advances twice
        MhTransition("drain", (None, "a"), "C", "drain2", (0, 1), ()),
        MhTransition("drain2", (None, "a"), "C", "drain", (0, 1), ("C",)),
        MhTransition("drain2", (None, "a"), "Z", "drain", (0, 1), ("Z",)),
        MhTransition("drain", (None, None), "Z", "climb", (0, 0), ("Z",)),
        # climb: head 1 catches up, one counter per cell
        MhTransition("climb", ("a", None), "Z", "climb", (1, 0), ("C", "Z"), apart),
        MhTransition("climb", ("a", None), "C", "climb", (1, 0), ("C", "C"), apart),
        MhTransition("climb", (None, None), "C", "bound", (0, 0), ("C",), meet),
    ]
    return MhpdaSpec(
        states={"init", "boot", "bound", "drain", "drain2", "climb", "acc"},
        input_alphabet={"a"},
        end_marker=END,
        stack_alphabet={"C", "Z"},
        heads=2,
        sensing=True,
        transitions=tuple(rows),
        initial="init",
        bottom="Z",
        finals={"acc"},
        name="doubling-2head",
    )
