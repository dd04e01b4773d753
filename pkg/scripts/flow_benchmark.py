"""Compare the three max-flow algorithms on random s-t-plane instances.

Prints agreement, the number of uppermost augmentations relative to |E| and
the mean time per instance of each algorithm.
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

from pathlattice.flow import CapacityMap, maxflow_dual_sp, maxflow_generic, maxflow_uppermost
from pathlattice.fixtures import random_instance


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--instances", type=int, default=300)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-edges", type=int, default=30)
    parser.add_argument("--max-cap", type=int, default=9)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    algos = {"uppermost": lambda g, c: maxflow_uppermost(g, c).flow, "dual-sp": maxflow_dual_sp, "generic": maxflow_generic}
    times = {name: [] for name in algos}
    ratios = []
    disagreements = 0
    for _ in range(args.instances):
        g, caps, und = random_instance(rng, max_edges=args.max_edges, max_cap=args.max_cap)
        cap = CapacityMap.from_edges(caps, und)
        values = set()
        for name, fn in algos.items():
            start = time.perf_counter()
            values.add(fn(g, cap).value)
            times[name].append(time.perf_counter() - start)
        disagreements += len(values) != 1
        ratios.append(maxflow_uppermost(g, cap).iterations / g.edge_count)

    print(f"instances        {args.instances}")
    print(f"disagreements    {disagreements}")
    print(f"augmentations/|E| mean {statistics.mean(ratios):.3f} max {max(ratios):.3f}")
    for name, ts in times.items():
        print(f"{name:<16} {1e6 * statistics.mean(ts):8.1f} us/instance")


if __name__ == "__main__":
    main()
