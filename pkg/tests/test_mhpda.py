import dataclasses

import pytest

from pcpalab import mhpda
from pcpalab.mhpda import EQ, NE, MhConfiguration, MhpdaSpec, MhTransition
from pcpalab.pcpa import InputAlphabetError


def two_head(rows, sensing=True):
    return MhpdaSpec({"s", "t"}, {"a", "b"}, "$", {"Z", "X"}, 2, sensing, tuple(rows), "s", "Z", {"t"})


def test_initial_configuration():
    spec = two_head([])
    assert mhpda.initial_configuration(spec, "ab") == MhConfiguration("s", (1, 1), ("Z",))
    assert mhpda.initial_configuration(spec, "") == MhConfiguration("s", (1, 1), ("Z",))
    with pytest.raises(InputAlphabetError):
        mhpda.initial_configuration(spec, "a$")


def test_coincidence_guard():
    row = MhTransition("s", (None, None), "Z", "t", (0, 0), ("Z",), frozenset({(1, 2, EQ)}))
    spec = two_head([row])
    assert mhpda.successors(spec, "aaaa", MhConfiguration("s", (2, 3), ("Z",))) == []
    assert mhpda.successors(spec, "aaaa", MhConfiguration("s", (3, 3), ("Z",)))
    row_ne = dataclasses.replace(row, guard=frozenset({(1, 2, NE)}))
    spec = two_head([row_ne])
    assert mhpda.successors(spec, "aaaa", MhConfiguration("s", (2, 3), ("Z",)))


def test_heads_never_pass_the_end_marker():
    row = MhTransition("s", (None, None), "Z", "s", (1, 0), ("Z",))
    spec = two_head([row], sensing=False)
    assert mhpda.successors(spec, "a", MhConfiguration("s", (2, 1), ("Z",))) == []
    assert mhpda.successors(spec, "a", MhConfiguration("s", (1, 1), ("Z",))) == [
        (MhConfiguration("s", (2, 1), ("Z",)), mhpda.MOVE)
    ]


def test_empty_stack_is_stuck():
    row = MhTransition("s", (None, None), "Z", "s", (0, 0), ())
    spec = two_head([row], sensing=False)
    (nxt, _), = mhpda.successors(spec, "", mhpda.initial_configuration(spec, ""))
    assert nxt.stack == ()
    assert mhpda.successors(spec, "", nxt) == []


def test_validate():
    ok = MhTransition("s", ("a", None), "Z", "t", (1, 0), ("X", "Z"))
    assert mhpda.validate(two_head([ok], sensing=False)) == []
    guarded = dataclasses.replace(ok, guard=frozenset({(1, 2, EQ)}))
    assert any("non-sensing" in p for p in mhpda.validate(two_head([guarded], sensing=False)))
    past_end = dataclasses.replace(ok, scanned=("$", None))
    assert any("past the end-marker" in p for p in mhpda.validate(two_head([past_end])))
    arity = dataclasses.replace(ok, scanned=("a",), moves=(1,))
    assert any("expected 2" in p for p in mhpda.validate(two_head([arity])))
    spec = dataclasses.replace(two_head([ok]), input_alphabet=frozenset({"a", "$"}))
    assert any("end-marker" in p for p in mhpda.validate(spec))


def test_acceptance_is_by_state():
    spec = two_head([])
    assert mhpda.is_accepting(spec, MhConfiguration("t", (1, 1), ("Z",)))
    assert not mhpda.is_accepting(spec, MhConfiguration("s", (3, 3), ("Z",)))


def test_doubling_first_step_is_unique(doubling):
    start = mhpda.initial_configuration(doubling, "aaaa")
    assert len(mhpda.successors(doubling, "aaaa", start)) == 1


@pytest.mark.parametrize("word, status", [
    ("ababa", "accepted"),
    ("aaaaa", "accepted"),
    ("ab", "rejected_exhaustive"),
    ("aabba", "rejected_exhaustive"),
    ("", "rejected_exhaustive"),
])
def test_otto_decide(otto, word, status):
    assert mhpda.decide(otto, word).status == status


@pytest.mark.parametrize("n, status", [(4, "accepted"), (16, "accepted"), (12, "rejected_exhaustive"),
                                       (1, "rejected_exhaustive"), (2, "accepted"), (0, "rejected_exhaustive")])
def test_doubling_decide(doubling, n, status):
    assert mhpda.decide(doubling, "a" * n).status == status


def test_trace_run_matches_decide_for_deterministic(doubling):
    for n in range(0, 40):
        w = "a" * n
        trace = mhpda.trace_run(doubling, w)
        assert mhpda.is_accepting(doubling, trace.last) == mhpda.decide(doubling, w).accepted


def test_format_configuration(doubling):
    c = MhConfiguration("climb", (3, 5), ("C", "Z"))
    assert mhpda.format_configuration(doubling, "aaaa", c) == "(climb, (3, 5), CZ)"
