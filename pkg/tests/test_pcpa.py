import dataclasses

import pytest

from pcpalab import pcpa
from pcpalab.pcpa import COMMUNICATION, INTERNAL, Configuration, InputAlphabetError, InvalidMachine
from pcpalab.search import SearchBudget


def cfg(s1, n1, st1, s2, n2, st2):
    return Configuration((s1, s2), (n1, n2), (tuple(st1), tuple(st2)))


def test_power_spec_is_valid(power_spec):
    assert pcpa.validate(power_spec) == []


def test_validate_flags_noncentralized(power_spec):
    c2 = power_spec.components[1]
    bad_row = pcpa.Transition("q1^2", "a", "a", "q1^2", ("K2",))
    c2 = dataclasses.replace(c2, transitions=c2.transitions + (bad_row,))
    spec = dataclasses.replace(power_spec, components=(power_spec.components[0], c2))
    problems = pcpa.validate(spec)
    assert len(problems) == 1
    assert "component 2" in problems[0] and "centralized" in problems[0]


def test_validate_flags_bottom_query(power_spec):
    spec = dataclasses.replace(power_spec, query_symbols=("Z", "K2"))
    assert any("bottom symbol Z" in p for p in pcpa.validate(spec))

    c1 = dataclasses.replace(power_spec.components[0], bottom="B1")
    spec = dataclasses.replace(
        power_spec,
        components=(c1, power_spec.components[1]),
        stack_alphabet=power_spec.stack_alphabet | {"B1"},
        query_symbols=("B1", "K2"),
    )
    assert len(pcpa.validate(spec)) == 1


def test_validate_flags_self_query(power_spec):
    c1 = power_spec.components[0]
    c1 = dataclasses.replace(c1, transitions=c1.transitions + (pcpa.Transition("q1^1", "a", "a", "q1^1", ("K1",)),))
    spec = dataclasses.replace(power_spec, components=(c1, power_spec.components[1]))
    problems = pcpa.validate(spec)
    assert len(problems) == 1 and "own query symbol" in problems[0]


def test_validate_flags_structure(power_spec):
    c1 = dataclasses.replace(power_spec.components[0], initial="nowhere", finals=frozenset({"ghost"}))
    spec = dataclasses.replace(power_spec, components=(c1, power_spec.components[1]), query_symbols=("K1", "K1"))
    problems = pcpa.validate(spec)
    assert any("initial" in p for p in problems)
    assert any("ghost" in p for p in problems)
    assert any("distinct" in p for p in problems)


def test_initial_configuration(power_spec):
    assert pcpa.initial_configuration(power_spec, "aa") == cfg("q0^1", 0, "Z", "q0^2", 0, "Z")
    assert pcpa.initial_configuration(power_spec, "") == cfg("q0^1", 0, "Z", "q0^2", 0, "Z")
    with pytest.raises(InputAlphabetError):
        pcpa.initial_configuration(power_spec, "ab")


def test_first_step_of_a8(power_spec):
    start = pcpa.initial_configuration(power_spec, "a" * 8)
    assert pcpa.successors(power_spec, "a" * 8, start) == [(cfg("q1^1", 1, "Z", "q1^2", 1, "Z"), INTERNAL)]


def test_communication_step_of_a8(power_spec):
    c = cfg("q2^1", 2, ["K2"], "q1^2", 2, "aZ")
    assert pcpa.successors(power_spec, "a" * 8, c) == [(cfg("q2^1", 2, "aZ", "q1^2", 2, "Z"), COMMUNICATION)]


def test_stuck_when_input_exhausted(power_spec):
    c = cfg("q1^1", 1, "Z", "q1^2", 1, "Z")
    assert pcpa.successors(power_spec, "a", c) == []


def three_way_query_spec():
    comps = [pcpa.make_component([s], s, "Z", [s], []) for s in ("s", "t", "u")]
    return pcpa.PcpaSpec({"a"}, {"Z", "X", "K1", "K2", "K3"}, comps, ("K1", "K2", "K3"))


def test_unresolvable_communication_is_stuck():
    spec = three_way_query_spec()
    c = Configuration(("s", "t", "u"), (0, 0, 0), (("K2",), ("X", "Z"), ("Z",)))
    # component 1 queries 2, whose top is not a query: resolves
    assert pcpa.successors(spec, "", c)
    c = Configuration(("s", "t", "u"), (0, 0, 0), (("K2",), ("K3",), ("Z",)))
    # a pending query whose target is itself querying resolves nothing, but the
    # other query (2 -> 3) does
    (nxt, kind), = pcpa.successors(spec, "", c)
    assert kind == COMMUNICATION
    assert nxt.stacks == (("K2",), ("Z",), ("Z",))
    c = Configuration(("s", "t", "u"), (0, 0, 0), (("K2",), ("K1",), ("Z",)))
    assert pcpa.successors(spec, "", c) == []


def test_is_accepting(power_spec):
    w = "a" * 8
    assert pcpa.is_accepting(power_spec, w, cfg("q2^1", 8, ["K2"], "q1^2", 8, "aaaaaaaZ"))
    assert not pcpa.is_accepting(power_spec, w, pcpa.initial_configuration(power_spec, w))
    assert not pcpa.is_accepting(power_spec, w, cfg("q1^1", 8, "Z", "q1^2", 8, "Z"))
    assert not pcpa.is_accepting(power_spec, w, cfg("q2^1", 7, "Z", "q1^2", 8, "Z"))


@pytest.mark.parametrize("word, status", [
    ("aa", "accepted"),
    ("aaa", "rejected_exhaustive"),
    ("", "rejected_exhaustive"),
    ("a", "rejected_exhaustive"),
])
def test_decide(power_spec, word, status):
    assert pcpa.decide(power_spec, word).status == status


def test_decide_witness_is_a_path(power_spec):
    w = "a" * 16
    v = pcpa.decide(power_spec, w)
    assert v.accepted
    configs = v.witness.configs
    assert configs[0] == pcpa.initial_configuration(power_spec, w)
    for (prev, step) in zip(configs, v.witness.steps[1:]):
        assert (step.config, step.kind) in pcpa.successors(power_spec, w, prev)
    assert pcpa.is_accepting(power_spec, w, configs[-1])


def test_decide_reports_budget_exhaustion(power_spec):
    v = pcpa.decide(power_spec, "a" * 16, SearchBudget(max_depth=3, max_configs=100))
    assert v.inconclusive
    v = pcpa.decide(power_spec, "a" * 16, SearchBudget(max_depth=100, max_configs=4))
    assert v.inconclusive


def test_decide_requires_valid_spec(power_spec):
    spec = dataclasses.replace(power_spec, query_symbols=("K1",))
    with pytest.raises(InvalidMachine):
        pcpa.decide(spec, "aa")


def test_trace_run_short_word(power_spec):
    trace = pcpa.trace_run(power_spec, "a")
    assert len(trace) == 2
    assert not pcpa.is_accepting(power_spec, "a", trace.last)
    assert pcpa.successors(power_spec, "a", trace.last) == []


def test_trace_run_zero_steps(power_spec):
    trace = pcpa.trace_run(power_spec, "aaaa", max_steps=0)
    assert trace.configs == [pcpa.initial_configuration(power_spec, "aaaa")]


def test_trace_of_a8_has_eleven_configurations(power_spec):
    trace = pcpa.trace_run(power_spec, "a" * 8)
    assert len(trace) == 11
    assert pcpa.is_accepting(power_spec, "a" * 8, trace.last)
    kinds = [s.kind for s in trace.steps]
    assert kinds.count(COMMUNICATION) == 2
