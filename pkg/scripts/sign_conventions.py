"""Compare tetrahedron sign rules by gauge consistency.

For a cocycle system that satisfies the conditions but not the symmetries,
the sum over all primal states with the dual gauge fixed must agree with the
other gauge choices.  A sign rule that breaks this is not a consistent
reading of the weights.
"""
import argparse
import random

from tlft.cocycles import combine, search_systems
from tlft.fixtures import sphere
from tlft.groups import group_from_spec
from tlft.pachner import random_walk
from tlft.tlft4 import PartitionConfig, partition_4d


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--group", default="Z3")
    ap.add_argument("-N", type=int, default=3)
    ap.add_argument("--trials", type=int, default=3)
    ap.add_argument("--moves", type=int, default=0, help="random 4D moves applied first")
    args = ap.parse_args()
    G = group_from_spec(args.group)
    gens = search_systems(G, args.N, include_symmetries=False)
    T, _ = random_walk(sphere(4), args.moves, 0, max_facets=16)
    for trial in range(args.trials):
        rng = random.Random(trial)
        sys = combine(gens, [rng.randrange(args.N) for _ in gens])
        for rule in ("crossing", "positive-facet"):
            vals = {}
            for gauge in ("primal", "dual", "both"):
                cfg = PartitionConfig(gauge=gauge, tet_sign=rule, check_cocycle=False)
                vals[gauge] = partition_4d(T, sys, cfg).value
            agree = len(set(vals.values())) == 1
            print(f"trial {trial} {rule:15s} agree={agree} "
                  + " ".join(f"{g}={v!r}" for g, v in vals.items()))


if __name__ == "__main__":
    main()
