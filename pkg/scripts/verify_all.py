"""Run every theorem and conjecture check over a range of sizes; one JSON line per report."""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import dataclass

from schurkit import theorems


@dataclass
class Config:
    max_n: int = 7
    poset_max_n: int = 7
    support_max_n: int = 10
    jobs: int = 1


def checks(cfg: Config):
    """Zero-argument report thunks in run order."""
    for n in range(1, cfg.max_n + 1):
        yield lambda n=n: theorems.verify_lemma_extreme(n)
        yield lambda n=n: theorems.ribbon_expansion_matches(n)
        yield lambda n=n: theorems.verify_minrib_all(n)
    for n in range(1, cfg.poset_max_n + 1):
        yield lambda n=n: theorems.verify_theorem_main(n, with_poset=True, jobs=cfg.jobs)
        yield lambda n=n: theorems.verify_conjecture_max(n, cfg.jobs)
        yield lambda n=n: theorems.verify_reductions(n, cfg.jobs)
    for n in range(cfg.poset_max_n + 1, cfg.support_max_n + 1):
        yield lambda n=n: theorems.verify_theorem_support(n)


def main() -> int:
    defaults = Config()
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=defaults.max_n)
    p.add_argument("--poset-max-n", type=int, default=defaults.poset_max_n)
    p.add_argument("--support-max-n", type=int, default=defaults.support_max_n)
    p.add_argument("--jobs", type=int, default=defaults.jobs)
    cfg = Config(**{k.replace("-", "_"): v for k, v in vars(p.parse_args()).items()})
    failed = 0
    for run in checks(cfg):
        t0 = time.perf_counter()
        rep = run()
        line = rep.to_json()
        line["seconds"] = round(time.perf_counter() - t0, 3)
        print(json.dumps(line), flush=True)
        failed += not rep.passed
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
