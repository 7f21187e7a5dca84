"""Random-graph check of |I(G;-1)| <= 2^phi(G).

    python scripts/engstrom_sweep.py --trials 5000 --n-max 11 --seed 1 --json out.json
"""

import argparse
import json

from indpoly.verify import engstrom_sweep

if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--n-max", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", help="write the full report here")
    args = ap.parse_args()

    rep = engstrom_sweep(args.n_max, args.trials, args.seed)
    print(rep.to_text())
    for ex in rep.tight_examples:
        print("  tight:", ex)
    for v in rep.violations:
        print("  VIOLATION:", v)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rep.to_dict(), fh, indent=1)
    raise SystemExit(0 if rep.passed else 1)
