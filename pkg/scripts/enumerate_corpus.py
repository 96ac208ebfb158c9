"""Tabulate the exhaustive corpora and their separation profile.

    python3 scripts/enumerate_corpus.py [--max-points 4] [--max-lattice 8]

For each number of points: how many topologies there are, and how many of
them satisfy each separation axiom. Then the distributive lattices up to
isomorphism by size.
"""

import argparse
from collections import Counter

from mtlab.functors import powerset_mt
from mtlab.generate import all_topologies, distributive_lattices_upto
from mtlab.mt import separation_check

AXIOMS = ("T0", "T_half", "T1", "sober", "hausdorff", "regular", "zero_dim")


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description="Summarise the exhaustive corpora.")
    ap.add_argument("--max-points", type=int, default=4)
    ap.add_argument("--max-lattice", type=int, default=8)
    args = ap.parse_args(argv)

    print("points  topologies  " + "  ".join(f"{a:>9}" for a in AXIOMS))
    for n in range(args.max_points + 1):
        tops = all_topologies(n)
        counts = Counter()
        for x in tops:
            m = powerset_mt(x)
            for a in AXIOMS:
                counts[a] += bool(separation_check(m, a))
        print(f"{n:>6}  {len(tops):>10}  " + "  ".join(f"{counts[a]:>9}" for a in AXIOMS))

    sizes = Counter(l.size for l in distributive_lattices_upto(args.max_lattice))
    print("\nsize  distributive lattices")
    for k in range(1, args.max_lattice + 1):
        print(f"{k:>4}  {sizes[k]:>5}")


if __name__ == "__main__":
    main()
