"""Compile the fixture register programs and check verdicts and invariants
against the interpreter on all words up to a length."""
import argparse
import time
from dataclasses import dataclass

from pcpalab import pcpa, regmachine as rm
from pcpalab.constructions import compile_rm_to_pcpa, doubling_program, mod3_program, parity_program
from pcpalab.constructions.rm_compiler import check_invariants
from pcpalab.search import SearchBudget
from pcpalab.workbench import words

PROGRAMS = {"parity": parity_program, "doubling": doubling_program, "mod3": mod3_program}


@dataclass
class Config:
    max_len: int = 6
    max_depth: int = 200_000
    max_configs: int = 5_000_000


def sweep(cfg: Config, names) -> int:
    budget = SearchBudget(cfg.max_depth, cfg.max_configs)
    failures = 0
    for name in names:
        prog = PROGRAMS[name]()
        spec, cmap = compile_rm_to_pcpa(prog)
        t0 = time.perf_counter()
        states = sum(len(c.states) for c in spec.components)
        print(f"{name}: {states} states, {sum(len(c.transitions) for c in spec.components)} transitions")
        for w in words(sorted(prog.input_alphabet), cfg.max_len):
            want = rm.run(prog, w)
            v = pcpa.decide(spec, w, budget)
            rep = check_invariants(prog, spec, cmap, w, budget)
            ok = v.accepted == want.accepted and not v.inconclusive and not rep.violations
            failures += not ok
            print(f"  {''.join(w) or 'ε':<8} rm={want.status:<9} pcpa={v.status:<20} "
                  f"explored={v.explored:<8} boundaries={rep.boundaries} transfers={len(rep.transfers)}"
                  + ("" if ok else f"  FAIL {rep.violations[:2]}"))
        print(f"  {time.perf_counter() - t0:.1f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("programs", nargs="*", default=list(PROGRAMS), choices=list(PROGRAMS))
    p.add_argument("--max-len", type=int, default=Config.max_len)
    a = p.parse_args()
    raise SystemExit(sweep(Config(max_len=a.max_len), a.programs))
