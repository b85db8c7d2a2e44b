"""The degree-2 returning system accepting a^(2^n), n >= 1.

Component 1 reads one symbol per stack symbol it pops; meanwhile component 2
pushes about twice as many. When component 1 exposes the bottom it queries
component 2 and starts over with the copied counter.

The published table is reproduced with two corrections: the two rows headed
by component 1 on state q0^2 belong to component 2, and one bottom symbol Z
is shared by both components (component 1 has to match its own rows on the
bottom it receives from component 2).
"""
from ..pcpa import PcpaSpec, make_component


def build_power_of_two_pcpa() -> PcpaSpec:
    c1 = make_component(
        ["q0^1", "q1^1", "q2^1"],
        "q0^1",
        "Z",
        ["q2^1"],
        [
            ("q0^1", "a", "Z", "q1^1", ["Z"]),
            ("q0^1", "a", "a", "q1^1", ["a"]),
            ("q1^1", "a", "Z", "q2^1", ["K2"]),
            ("q1^1", "a", "a", "q1^1", []),
            ("q2^1", "a", "Z", "q1^1", ["K2"]),
            ("q2^1", "a", "a", "q1^1", []),
        ],
    )
    c2 = make_component(
        ["q0^2", "q1^2"],
        "q0^2",
        "Z",
        ["q1^2"],
        [
            ("q0^2", "a", "Z", "q1^2", ["Z"]),
            ("q0^2", "a", "a", "q1^2", ["a"]),
            ("q1^2", "a", "Z", "q1^2", ["a", "Z"]),
            ("q1^2", "a", "a", "q1^2", ["a", "a", "a"]),
        ],
    )
    return PcpaSpec(
        input_alphabet={"a"},
        stack_alphabet={"a", "Z", "K1", "K2"},
        components=(c1, c2),
        query_symbols=("K1", "K2"),
        name="power-of-two-pcpa",
    )
