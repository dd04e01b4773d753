"""Table of every named fixture: size, path count, s-t-plane flag and axiom report."""

from __future__ import annotations

import argparse
import time

from pathlattice.fixtures import fixtures
from pathlattice.lattice import meet
from pathlattice.verify import OrderTable, check_axioms, enumerate_simple_paths, is_st_plane_embedding


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--ground", choices=("darts", "edges"), default="darts")
    parser.add_argument("--only", nargs="*", help="fixture names to include")
    args = parser.parse_args()

    header = f"{'fixture':<22}{'V':>4}{'E':>4}{'F':>4}{'paths':>7}  st  axioms         cycles  seconds"
    print(header)
    print("-" * len(header))
    for name, fx in fixtures().items():
        if args.only and name not in args.only:
            continue
        g = fx.graph
        start = time.perf_counter()
        fam = enumerate_simple_paths(g)
        rep = check_axioms(g, fam, ground=args.ground)
        table = OrderTable(fam)
        cycles = sum(len(meet(g, p, q).cycles) for p in table.paths for q in table.paths)
        elapsed = time.perf_counter() - start
        bad = ",".join(sorted(rep.counts())) or "ok"
        st = "yes" if is_st_plane_embedding(g) else "no"
        print(
            f"{name:<22}{g.vertex_count:>4}{g.edge_count:>4}{g.face_count:>4}{len(fam):>7}"
            f"  {st:<3} {bad:<14} {cycles:>6}  {elapsed:7.2f}"
        )


if __name__ == "__main__":
    main()
