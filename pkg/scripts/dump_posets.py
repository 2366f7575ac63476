"""Write P_N and Supp_N (full and connected parts) as DOT and JSON, plus a summary table."""
from __future__ import annotations

import argparse
import json
from dataclasses import dataclass
from pathlib import Path

from schurkit.posets import maximal_connected, poset


@dataclass
class Config:
    min_n: int = 1
    max_n: int = 6
    out: Path = Path("posets")
    jobs: int = 1


def summarize(n: int, order: str, jobs: int) -> tuple[dict, dict[str, str]]:
    f = poset(n, order, jobs)
    conn = f.connected_part()
    row = {
        "n": n,
        "order": order,
        "elements": len(f),
        "connected": len(conn),
        "covers": len(f.cover_pairs()),
        "graded": f.is_graded(),
        "join_semilattice": f.is_join_semilattice(),
        "maximal_connected": [c.label for c in maximal_connected(f)],
    }
    tag = f"{'P' if order == 'schur' else 'Supp'}_{n}"
    files = {
        f"{tag}.dot": f.to_dot(tag),
        f"{tag}_connected.dot": conn.to_dot(f"{tag}_connected"),
        f"{tag}.json": json.dumps(f.to_json()) + "\n",
    }
    return row, files


def main() -> None:
    defaults = Config()
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--min-n", type=int, default=defaults.min_n)
    p.add_argument("--max-n", type=int, default=defaults.max_n)
    p.add_argument("--out", type=Path, default=defaults.out)
    p.add_argument("--jobs", type=int, default=defaults.jobs)
    cfg = Config(**vars(p.parse_args()))
    cfg.out.mkdir(parents=True, exist_ok=True)
    for n in range(cfg.min_n, cfg.max_n + 1):
        for order in ("schur", "support"):
            row, files = summarize(n, order, cfg.jobs)
            for name, text in files.items():
                (cfg.out / name).write_text(text)
            print(json.dumps(row), flush=True)


if __name__ == "__main__":
    main()
