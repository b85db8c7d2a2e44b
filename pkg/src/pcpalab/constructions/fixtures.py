"""Extra fixture machines for the compilers and the workbench.

``build_palindrome_pcpa`` is a synchronous degree-2 system (every transition
reads a symbol) for even palindromes of length >= 2: component 2 pushes each
symbol it reads, marking the first one in upper case; component 1 guesses the
midpoint, queries component 2 and matches the copied stack against the rest
of the input. ``build_anbn_pcpa`` is a communication-free degree-1 system for
a^n b^n, n >= 1. The register-machine programs exercise every instruction.
"""
from ..pcpa import PcpaSpec, make_component
from ..regmachine import Accept, DivMod, Mul, Read, Reject, RmProgram

SIGMA = ("a", "b")
MARK = {"a": "A", "b": "B"}


def build_palindrome_pcpa() -> PcpaSpec:
    rows1 = []
    for x in SIGMA:
        rows1.append(("wait", x, "Z", "wait", ["Z"]))
        rows1.append(("wait", x, "Z", "match", ["K2", "Z"]))
        rows1.append(("match", x, x, "match", []))
        rows1.append(("match", x, MARK[x], "done", []))
    rows2 = []
    for x in SIGMA:
        rows2.append(("first", x, "Z", "rest", [MARK[x], "Z"]))
        for t in ("Z", "a", "b", "A", "B"):
            rows2.append(("rest", x, t, "rest", [x, t]))
    return PcpaSpec(
        input_alphabet=set(SIGMA),
        stack_alphabet={"Z", "a", "b", "A", "B", "K1", "K2"},
        components=(
            make_component(["wait", "match", "done"], "wait", "Z", ["done"], rows1),
            make_component(["first", "rest"], "first", "Z", ["first", "rest"], rows2),
        ),
        query_symbols=("K1", "K2"),
        name="palindrome-pcpa",
    )


def oracle_even_palindrome(word) -> bool:
    w = tuple(word)
    return len(w) >= 2 and len(w) % 2 == 0 and w == w[::-1]


def build_anbn_pcpa() -> PcpaSpec:
    rows = [
        ("p", "a", "Z", "p", ["A0", "Z"]),
        ("p", "a", "A0", "p", ["A", "A0"]),
        ("p", "a", "A", "p", ["A", "A"]),
        ("p", "b", "A", "q", []),
        ("p", "b", "A0", "f", []),
        ("q", "b", "A", "q", []),
        ("q", "b", "A0", "f", []),
    ]
    return PcpaSpec(
        input_alphabet=set(SIGMA),
        stack_alphabet={"Z", "A", "A0", "K1"},
        components=(make_component(["p", "q", "f"], "p", "Z", ["f"], rows),),
        query_symbols=("K1",),
        name="anbn-pcpa",
    )


def oracle_anbn(word) -> bool:
    w = "".join(word)
    n = len(w) // 2
    return n >= 1 and w == "a" * n + "b" * n


def parity_program() -> RmProgram:
    """Accepts words over {a} of even length."""
    return RmProgram(
        instructions={
            "even": Read({"a": "odd"}, "yes"),
            "odd": Read({"a": "even"}, "no"),
            "yes": Accept(),
            "no": Reject(),
        },
        entry="even",
        input_alphabet={"a"},
        name="parity",
    )


def doubling_program() -> RmProgram:
    """Doubles the register per 'a', then halves it back down to 1 counting
    the halvings mod 2; accepts iff that count is even."""
    return RmProgram(
        instructions={
            "read": Read({"a": "dbl"}, "half0"),
            "dbl": Mul(2, "read"),
            "half0": DivMod(2, ("half1", "yes")),
            "half1": DivMod(2, ("half0", "no")),
            "yes": Accept(),
            "no": Reject(),
        },
        entry="read",
        input_alphabet={"a"},
        name="doubling",
    )


def mod3_program() -> RmProgram:
    """Register 2^#a * 3^#b; strips the factors of 3 and branches three ways
    on the remainder. Accepts iff #a is odd."""
    return RmProgram(
        instructions={
            "read": Read({"a": "two", "b": "three"}, "strip"),
            "two": Mul(2, "read"),
            "three": Mul(3, "read"),
            "strip": DivMod(3, ("strip", "no", "yes")),
            "yes": Accept(),
            "no": Reject(),
        },
        entry="read",
        input_alphabet={"a", "b"},
        name="mod3",
    )


def accept_only_program() -> RmProgram:
    return RmProgram({"acc": Accept()}, "acc", {"a"}, name="accept-only")
