"""Synthesize and verify every (k, q) for a range of k, reporting graph sizes and timings.

    python scripts/kq_sweep.py --k-max 6 --jobs 4
"""

from __future__ import annotations

import argparse
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from indpoly.synth import realize, synth
from indpoly.verify import check_synth


@dataclass
class SweepConfig:
    k_min: int = 1
    k_max: int = 5
    level: str | None = None  # default: full for k <= 4, poly above
    jobs: int = 1


def run_one(k: int, q: int, level: str | None):
    t0 = time.perf_counter()
    _, ok, failed = check_synth(k, q, level)
    n = realize(synth(k, q)).n
    return k, q, ok, failed, n, time.perf_counter() - t0


def main(cfg: SweepConfig) -> int:
    tasks = [(k, q) for k in range(cfg.k_min, cfg.k_max + 1) for q in range(-(2**k), 2**k + 1)]
    with ProcessPoolExecutor(max_workers=max(cfg.jobs, 1)) as pool:
        results = list(pool.map(run_one, *zip(*tasks), [cfg.level] * len(tasks)))
    bad = 0
    for k in range(cfg.k_min, cfg.k_max + 1):
        rows = [r for r in results if r[0] == k]
        fails = [(q, f) for _, q, ok, f, _, _ in rows if not ok]
        bad += len(fails)
        sizes = [r[4] for r in rows]
        secs = sum(r[5] for r in rows)
        print(f"k={k}: {len(rows) - len(fails)}/{len(rows)} pass, |V| in [{min(sizes)}, {max(sizes)}], {secs:.2f}s")
        for q, f in fails:
            print(f"   q={q}: {f}")
    return 1 if bad else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--k-min", type=int, default=1)
    ap.add_argument("--k-max", type=int, default=5)
    ap.add_argument("--level", choices=("poly", "oracle", "full"))
    ap.add_argument("--jobs", type=int, default=1)
    a = ap.parse_args()
    raise SystemExit(main(SweepConfig(a.k_min, a.k_max, a.level, a.jobs)))
