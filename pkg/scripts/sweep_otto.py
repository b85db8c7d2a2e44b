"""Compare the two-head acceptor with its oracle on every word up to a length,
reporting where the heads stop on accepting runs."""
import argparse
import time
from dataclasses import dataclass

from pcpalab import mhpda
from pcpalab.constructions import build_otto_acceptor, oracle_otto
from pcpalab.constructions.otto import head_stops
from pcpalab.workbench import words


@dataclass
class Config:
    max_len: int = 12
    alphabet: str = "ab"


def sweep(cfg: Config) -> int:
    spec = build_otto_acceptor()
    t0 = time.perf_counter()
    bad = 0
    for w in words(cfg.alphabet, cfg.max_len):
        v = mhpda.decide(spec, w)
        if v.inconclusive or v.accepted != oracle_otto(w):
            bad += 1
            print(f"mismatch {''.join(w)!r}: {v.status}")
        elif v.accepted:
            print(f"{''.join(w):<15} stops={head_stops(v.witness)}")
    print(f"{bad} mismatches, {time.perf_counter() - t0:.1f}s")
    return 1 if bad else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-len", type=int, default=Config.max_len)
    raise SystemExit(sweep(Config(max_len=p.parse_args().max_len)))
