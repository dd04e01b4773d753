"""Print the order-existence derivations for the Kuratowski path families.

Runs both ground sets: on edge sets both families are refuted, on dart sets
the eight-path family has a consistent order.
"""

from __future__ import annotations

from pathlattice.embed import format_path
from pathlattice.fixtures import drawn_fixtures
from pathlattice.verify import PathFamily, check_axioms, order_existence, replay_certificate


def main() -> None:
    for name in ("fig1", "k33st", "k5st"):
        fx = drawn_fixtures()[name]
        fam = PathFamily(fx.graph, fx.family, fx.family_names)
        print(f"== {name}")
        for n, p in zip(fam.names, fam.paths):
            print(f"   {n}: {format_path(p)}")
        rep = check_axioms(fx.graph)
        print(f"   all {rep.path_count} paths: {rep.counts() or 'no violations'}")
        for v in rep.violations[:3]:
            print(f"     {v.kind}: {v.detail}")
        for ground in ("edges", "darts"):
            verdict = order_existence(fam, ground=ground)
            print(f"-- ground {ground}")
            for line in verdict.lines():
                print(f"   {line}")
            if verdict.refuted:
                problems = replay_certificate(fam, verdict)
                print(f"   replay: {'ok' if not problems else problems}")
        print()


if __name__ == "__main__":
    main()
