"""Run the deterministic doubling machine on a^0..a^N and tabulate run length."""
import argparse
from dataclasses import dataclass

from pcpalab import mhpda
from pcpalab.constructions import build_doubling_sensing_pda, oracle_power_of_two


@dataclass
class Config:
    max_n: int = 1024
    every: int = 64


def sweep(cfg: Config) -> int:
    spec = build_doubling_sensing_pda()
    wrong = []
    print(f"{'n':>6} {'verdict':<20} {'configs':>8}")
    for n in range(cfg.max_n + 1):
        v = mhpda.decide(spec, "a" * n)
        if v.accepted != oracle_power_of_two("a" * n):
            wrong.append(n)
        if v.accepted or n % cfg.every == 0:
            print(f"{n:>6} {v.status:<20} {v.explored:>8}")
    print(f"mismatches: {wrong or 'none'}")
    return 1 if wrong else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=Config.max_n)
    p.add_argument("--every", type=int, default=Config.every)
    a = p.parse_args()
    raise SystemExit(sweep(Config(a.max_n, a.every)))
