"""Load the clock of a compiled MUL with G garbage counters and record the
sizes of the successive reset transfers."""
import argparse

from pcpalab import pcpa
from pcpalab.constructions import compile_rm_to_pcpa, doubling_program
from pcpalab.constructions.rm_compiler import CLOCK, boundary_state
from pcpalab.pcpa import COMMUNICATION, Configuration


def loads(garbage: int, phase: int = 0):
    spec, cmap = compile_rm_to_pcpa(doubling_program())
    c = Configuration((boundary_state("dbl", phase, False), f"k{phase}"), (0, 0),
                      (("C", "Z"), ("C",) * garbage + ("Z",)))
    out = []
    while cmap[c.states[0]]["role"] in ("boundary", "reset") and len(out) < 100:
        succ = pcpa.successors(spec, "", c)
        if not succ:
            break
        nxt, kind = succ[0]
        if kind == COMMUNICATION:
            if cmap[c.states[0]]["role"] != "reset":
                break
            out.append(c.stacks[1].count("C"))
        c = nxt
    return out


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("garbage", type=int, nargs="*", default=[0, 1, 5, 6, 35, 36, 1000, 10**5])
    for g in p.parse_args().garbage:
        seq = loads(g)
        bound = all(b <= a // CLOCK + 1 for a, b in zip(seq, seq[1:]))
        print(f"G={g:<7} transfers={seq}  within bound: {bound}")
