"""Tabulate the diagonal ribbons and their boundary words, and compare them with the equitable ribbons.

With --check-up-to N the maximal connected classes of P_n are also built for
n <= N and compared against the diagonal prediction.
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from schurkit.theorems import boundary_word, conjectured_max_ribbon, enumerate_equitable, verify_conjecture_max


@dataclass
class Config:
    max_n: int = 12
    check_up_to: int = 0


def main() -> int:
    defaults = Config()
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=defaults.max_n)
    p.add_argument("--check-up-to", type=int, default=defaults.check_up_to)
    cfg = Config(**vars(p.parse_args()))
    print(f"{'n':>3} {'l':>3}  {'ribbon':<24} {'equitable':>9}  word")
    for n in range(1, cfg.max_n + 1):
        for l in range(1, n + 1):
            alpha = conjectured_max_ribbon(n, l)
            label = "".join(map(str, alpha)) if max(alpha) < 10 else ",".join(map(str, alpha))
            print(f"{n:>3} {l:>3}  {label:<24} {len(enumerate_equitable(n, l)):>9}  {boundary_word(alpha)}")
    status = 0
    for n in range(1, cfg.check_up_to + 1):
        rep = verify_conjecture_max(n)
        print(f"P_{n}: {'agrees' if rep.passed else 'DISAGREES'} ({rep.checked} maximal classes)")
        status |= not rep.passed
    return status


if __name__ == "__main__":
    raise SystemExit(main())
