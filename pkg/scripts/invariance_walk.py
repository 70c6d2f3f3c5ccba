"""Evaluate the 4D invariant along a random Pachner walk, printing one line per
move (and per dual seed), for a random combination of searched symmetric
cocycle generators."""
import argparse
import random

from tlft.cocycles import combine, search_systems
from tlft.fixtures import sphere
from tlft.groups import group_from_spec
from tlft.pachner import random_walk
from tlft.tlft4 import PartitionConfig, partition_4d


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--group", default="Z2")
    ap.add_argument("-N", type=int, default=2)
    ap.add_argument("--steps", type=int, default=6)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-facets", type=int, default=20)
    ap.add_argument("--gauge", default="both")
    ap.add_argument("--dual-seeds", type=int, nargs="+", default=[0, 1])
    args = ap.parse_args()
    G = group_from_spec(args.group)
    gens = search_systems(G, args.N, True)
    rng = random.Random(args.seed)
    sys = combine(gens, [rng.randrange(args.N) for _ in gens])
    T = sphere(4)
    for step in range(args.steps + 1):
        for ds in args.dual_seeds:
            r = partition_4d(T, sys, PartitionConfig(dual_seed=ds, gauge=args.gauge))
            print(f"step {step} facets {len(T.facets):3d} dual_seed {ds} psi {r.value!r} "
                  f"states {r.states} {r.seconds:.2f}s")
        T, log = random_walk(T, 1, args.seed * 1000 + step, max_facets=args.max_facets)
        print("   ", *[line for line in log if not line.startswith("#")])


if __name__ == "__main__":
    main()
