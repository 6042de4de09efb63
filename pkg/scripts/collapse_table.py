#!/usr/bin/env python3
"""Tabulate finite connected Ramsey numbers R_kappa(m; k) over a small grid.

For each (m, kappa, k) the script searches n = m, m+1, ..., n_max for the
least n at which no avoiding coloring exists, and prints one row per
parameter point together with the search effort.  Points that stay open up
to n_max are reported as "> n_max".

Typical run:

    python3 scripts/collapse_table.py --max-m 4 --max-kappa 3 --nmax 7
"""

import argparse
import time

from hcramsey.search import ramsey_number


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-m", type=int, default=3)
    ap.add_argument("--max-kappa", type=int, default=3)
    ap.add_argument("--colors", type=int, default=2)
    ap.add_argument("--nmax", type=int, default=6)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--budget", type=int, default=None,
                    help="node budget per search; exceeded points print '?'")
    args = ap.parse_args()

    print(f"{'m':>3} {'kappa':>5} {'k':>3} {'value':>7} {'nodes':>10} {'time':>8}")
    for m in range(2, args.max_m + 1):
        for kappa in range(1, args.max_kappa + 1):
            if kappa > m:
                continue
            start = time.perf_counter()
            result = ramsey_number(
                m, kappa, args.colors, args.nmax,
                node_budget=args.budget, workers=args.workers,
            )
            elapsed = time.perf_counter() - start
            nodes = sum(o.stats.nodes for o in result.outcomes.values())
            if result.status == "determined":
                value = str(result.value)
            elif result.status == "open":
                value = f"> {args.nmax}"
            else:
                value = "?"
            print(f"{m:>3} {kappa:>5} {args.colors:>3} {value:>7} "
                  f"{nodes:>10} {elapsed:>7.2f}s")


if __name__ == "__main__":
    main()
