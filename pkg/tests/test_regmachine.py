import pytest

from pcpalab import regmachine as rm
from pcpalab.constructions import accept_only_program, doubling_program, mod3_program, parity_program
from pcpalab.regmachine import DivMod, Mul, Read, RmProgram, RmState


def single(ins):
    return RmProgram({"x": ins, "y": rm.Accept(), "z": rm.Reject(), "w": rm.Reject()}, "x", {"a"})


def test_mul():
    assert rm.step(single(Mul(2, "y")), "", RmState("x", 5, 0)) == RmState("y", 10, 0)


def test_divmod_keeps_register_on_nonzero_remainder():
    prog = single(DivMod(3, ("y", "z", "w")))
    assert rm.step(prog, "", RmState("x", 7, 0)) == RmState("z", 7, 0)


def test_divmod_divides_on_zero_remainder():
    prog = single(DivMod(2, ("y", "z")))
    assert rm.step(prog, "", RmState("x", 6, 0)) == RmState("y", 3, 0)


def test_read_and_end():
    prog = single(Read({"a": "y"}, "z"))
    assert rm.step(prog, "a", RmState("x", 1, 0)) == RmState("y", 1, 1)
    assert rm.step(prog, "a", RmState("x", 1, 1)) == RmState("z", 1, 1)


def test_accept_requires_consumed_input():
    prog = single(rm.Accept())
    assert rm.step(prog, "", RmState("x", 1, 0)) == rm.ACCEPTED
    assert rm.step(prog, "a", RmState("x", 1, 0)) == rm.REJECTED


@pytest.mark.parametrize("word, status", [("aaaa", "accepted"), ("aaa", "rejected"), ("", "accepted")])
def test_parity(word, status):
    assert rm.run(parity_program(), word).status == status


def test_doubling_program_peaks_at_eight():
    result = rm.run(doubling_program(), "aaa")
    assert max(s.register for s in result.states) == 8
    assert result.status == "rejected"
    assert rm.run(doubling_program(), "aaaa").accepted


def test_mod3_program():
    for w, expect in [("a", True), ("ab", True), ("aab", False), ("bbb", False), ("aaab", True)]:
        assert rm.run(mod3_program(), w).accepted is expect


def test_register_stays_positive():
    for prog, words in [(doubling_program(), ["a" * n for n in range(7)]),
                        (mod3_program(), ["ab", "bba", "aabb"])]:
        for w in words:
            assert all(s.register >= 1 for s in rm.run(prog, w).states)


def test_timeout():
    loop = RmProgram({"x": Mul(2, "y"), "y": DivMod(2, ("x", "x"))}, "x", {"a"})
    assert rm.run(loop, "", max_steps=50).status == rm.TIMEOUT


def test_validate():
    assert rm.validate(accept_only_program()) == []
    bad = RmProgram({"x": Mul(5, "nowhere")}, "start", {"a"})
    problems = rm.validate(bad)
    assert any("entry" in p for p in problems)
    assert any("factor" in p for p in problems)
    assert any("nowhere" in p for p in problems)
