#!/usr/bin/env python3
"""Survey the two explicit avoiding constructions at small finite scale.

Part 1: first-difference colorings of the full bitstring family of each
length, checked for monochromatic triangles and for 3-connected
monochromatic triples, plus the same checks over shuffled enumeration
orders (the construction should not care about the order).

Part 2: spanning-path partitions of K_n for even n, checked to be forest
color classes partitioning the edge set with no 2-connected monochromatic
triple, with the color count n/2 printed next to the 2-color lower bound
they beat.

    python3 scripts/shadow_survey.py --max-length 4 --max-n 10 --shuffles 10
"""

import argparse
import random

from hcramsey.colorings import (
    BitstringFamily,
    check_sierpinski_triangle_free,
    forest_partition_coloring,
    sierpinski_coloring,
)
from hcramsey.graphs import all_pairs, is_forest
from hcramsey.search import arrow_check


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-length", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--shuffles", type=int, default=10)
    ap.add_argument("--seed", type=int, default=20181215)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    print("first-difference colorings")
    print(f"{'length':>7} {'points':>7} {'colors':>7} {'orders':>7} {'clean':>6}")
    for length in range(1, args.max_length + 1):
        base = list(BitstringFamily.full(length).strings)
        orders = [tuple(base)]
        for _ in range(args.shuffles):
            shuffled = base[:]
            rng.shuffle(shuffled)
            orders.append(tuple(shuffled))
        clean = 0
        for strings in orders:
            fam = BitstringFamily(length, strings)
            c = sierpinski_coloring(fam)
            no_triple = c.n < 3 or arrow_check(c, 3, 3) is None
            if check_sierpinski_triangle_free(fam) and no_triple:
                clean += 1
        print(f"{length:>7} {len(base):>7} {2 * length:>7} "
              f"{len(orders):>7} {clean:>6}/{len(orders)}")

    print()
    print("spanning-path partitions")
    print(f"{'n':>4} {'colors':>7} {'forests':>8} {'partition':>10} {'no-triple':>10}")
    for n in range(4, args.max_n + 1, 2):
        c = forest_partition_coloring(n)
        classes = [c.color_class(xi) for xi in range(c.k)]
        forests = all(is_forest(g) for g in classes)
        covered = set()
        for g in classes:
            covered |= g.edges
        partition = covered == set(all_pairs(n)) and (
            sum(len(g.edges) for g in classes) == len(covered)
        )
        clean = arrow_check(c, 2, 3) is None
        print(f"{n:>4} {c.k:>7} {str(forests):>8} {str(partition):>10} "
              f"{str(clean):>10}")


if __name__ == "__main__":
    main()
