"""Command-line interface.

Exit codes: 0 accepted/pass, 1 rejected/fail, 2 inconclusive, 3 usage or
validation error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import io, mhpda, pcpa, regmachine
from .constructions import compile_rm_to_pcpa, compile_sync_pcpa_to_mhpda
from .pcpa import InputAlphabetError, InvalidMachine, PcpaSpec
from .registry import BUILTINS, ORACLES
from .regmachine import RmProgram
from .search import SearchBudget, as_word, render_symbols
from .workbench import enumerate_accepted, equiv_check, golden_trace_check, GOLDEN_TRACE

EXIT = {"accepted": 0, "pass": 0, "rejected_exhaustive": 1, "rejected": 1, "fail": 1,
        "inconclusive_budget": 2, "inconclusive": 2, "timeout": 2}
USAGE_ERROR = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def load_machine(ref: str):
    if ref.startswith("builtin:"):
        name = ref.split(":", 1)[1]
        if name not in BUILTINS:
            raise UsageError(f"unknown builtin {name!r}; known: {', '.join(BUILTINS)}")
        return BUILTINS[name]()
    return io.load(ref)


def load_decidable(ref: str):
    if ref.startswith("oracle:"):
        name = ref.split(":", 1)[1]
        if name not in ORACLES:
            raise UsageError(f"unknown oracle {name!r}; known: {', '.join(ORACLES)}")
        return ORACLES[name]
    return load_machine(ref)


def _budget(args, n: int):
    default = SearchBudget.default_for(n)
    return SearchBudget(args.max_depth or default.max_depth, args.max_configs or default.max_configs)


def _maybe_budget(args):
    if args.max_depth is None and args.max_configs is None:
        return None
    return SearchBudget(args.max_depth or 10_000, args.max_configs or 5_000_000)


def _parse_alphabet(text: str):
    if "," in text:
        return [s for s in text.split(",") if s]
    return list(text)


def cmd_run(args) -> int:
    machine = load_machine(args.machine)
    word = as_word(args.input)
    if isinstance(machine, RmProgram):
        regmachine.require_valid(machine)
        result = regmachine.run(machine, word, args.max_depth or 100_000)
        if args.trace:
            for s in result.states:
                print(f"({s.pc}, {s.register}, {render_symbols(word[s.consumed:])})")
        _report(args, {"verdict": result.status, "steps": len(result.states) - 1})
        return EXIT[result.status]
    module = pcpa if isinstance(machine, PcpaSpec) else mhpda
    verdict = module.decide(machine, word, _budget(args, len(word)))
    if args.trace:
        trace = verdict.witness if verdict.accepted else module.trace_run(machine, word, args.max_depth or 10_000)
        sys.stdout.write(module.format_trace(machine, word, trace))
    _report(args, {"verdict": verdict.status, "explored": verdict.explored})
    return EXIT[verdict.status]


def _report(args, payload: dict, lines=()):
    if args.json:
        print(json.dumps(payload))
        return
    for line in lines:
        print(line)
    if "verdict" in payload:
        print(f"verdict: {payload['verdict']}", file=sys.stderr if args.trace else sys.stdout)


def cmd_enumerate(args) -> int:
    machine = load_machine(args.machine)
    alphabet = _parse_alphabet(args.alphabet) if args.alphabet else sorted(_alphabet_of(machine))
    result = enumerate_accepted(machine, alphabet, args.max_len, _maybe_budget(args))
    if args.json:
        print(json.dumps({"accepted": [render_symbols(w) for w in result.accepted],
                          "inconclusive": [render_symbols(w) for w in result.inconclusive]}))
    else:
        for w in result.accepted:
            print(render_symbols(w))
        for w in result.inconclusive:
            print(f"inconclusive: {render_symbols(w)}", file=sys.stderr)
    return 2 if result.inconclusive else 0


def _alphabet_of(machine):
    return machine.input_alphabet


def cmd_equiv(args) -> int:
    a = load_decidable(args.a)
    b = load_decidable(args.b)
    if args.alphabet:
        alphabet = _parse_alphabet(args.alphabet)
    elif not callable(a):
        alphabet = sorted(_alphabet_of(a))
    elif not callable(b):
        alphabet = sorted(_alphabet_of(b))
    else:
        raise UsageError("--alphabet is required when comparing two oracles")
    report = equiv_check(a, b, alphabet, args.max_len, _maybe_budget(args))
    if args.json:
        print(json.dumps({
            "status": report.status,
            "word": None if report.word is None else render_symbols(report.word),
            "verdict_a": report.verdict_a,
            "verdict_b": report.verdict_b,
            "inconclusive": [render_symbols(w) for w in report.inconclusive],
            "alphabet": list(report.alphabet),
            "max_len": report.max_len,
            "checked": report.checked,
        }))
    else:
        print(report.describe())
    return EXIT[report.status]


def cmd_compile(args) -> int:
    source = load_machine(args.source)
    if args.direction == "rm-to-pcpa":
        if not isinstance(source, RmProgram):
            raise UsageError("rm-to-pcpa expects a register-machine program")
        out, cmap = compile_rm_to_pcpa(source)
    else:
        if not isinstance(source, PcpaSpec):
            raise UsageError("pcpa-to-mhpda expects a PCPA description")
        out, cmap = compile_sync_pcpa_to_mhpda(source)
    text = io.dumps(out, cmap.to_json())
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_builtin(args) -> int:
    text = io.dumps(load_machine(f"builtin:{args.name}"))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_golden(args) -> int:
    result = golden_trace_check(args.path or GOLDEN_TRACE, args.input)
    print("pass" if result.ok else result.diff)
    return 0 if result.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pcpalab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def budget_flags(sp):
        sp.add_argument("--max-depth", type=int, default=None)
        sp.add_argument("--max-configs", type=int, default=None)
        sp.add_argument("--json", action="store_true")

    r = sub.add_parser("run", help="decide one word")
    r.add_argument("machine", help="machine file or builtin:<name>")
    r.add_argument("--input", default="")
    r.add_argument("--trace", action="store_true")
    budget_flags(r)
    r.set_defaults(func=cmd_run)

    e = sub.add_parser("enumerate", help="list accepted words up to a length")
    e.add_argument("machine")
    e.add_argument("--alphabet", default=None, help="symbols, e.g. 'ab' or 'x,y,z'")
    e.add_argument("--max-len", type=int, required=True)
    budget_flags(e)
    e.set_defaults(func=cmd_enumerate)

    q = sub.add_parser("equiv", help="compare two machines or a machine and an oracle")
    q.add_argument("a")
    q.add_argument("b", help="machine, builtin:<name> or oracle:<name>")
    q.add_argument("--alphabet", default=None)
    q.add_argument("--max-len", type=int, required=True)
    budget_flags(q)
    q.set_defaults(func=cmd_equiv)

    c = sub.add_parser("compile", help="machine-to-machine translation")
    c.add_argument("direction", choices=["rm-to-pcpa", "pcpa-to-mhpda"])
    c.add_argument("source")
    c.add_argument("-o", "--output", default=None)
    c.set_defaults(func=cmd_compile)

    b = sub.add_parser("builtin", help="emit a built-in machine as a machine file")
    b.add_argument("name", choices=sorted(BUILTINS))
    b.add_argument("-o", "--output", default=None)
    b.set_defaults(func=cmd_builtin)

    g = sub.add_parser("golden", help="check the power-of-two trace against a golden file")
    g.add_argument("path", nargs="?", default=None)
    g.add_argument("--input", default="a" * 8)
    g.set_defaults(func=cmd_golden)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InvalidMachine, io.MachineFileError, InputAlphabetError, UsageError, FileNotFoundError) as exc:
        problems = getattr(exc, "violations", None) or [str(exc)]
        for line in problems:
            print(f"error: {line}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
