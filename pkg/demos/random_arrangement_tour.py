#!/usr/bin/env python3
"""Round trips on a random generic arrangement.

Draws a seeded generic arrangement, checks the axioms on its type set,
then exercises the structural identities: topes determine the whole set,
vertices determine the whole set, deletion/contraction stay lawful, and
duality is an involution that swaps the two minor operations.

Usage: random_arrangement_tour.py [n] [d] [seed]
"""

from __future__ import annotations

import sys

from tropom import (
    TomTypeSet,
    arrangement_tom,
    check_axioms,
    contract,
    delete,
    dual,
    eliminate_points,
    random_generic_arrangement,
    reconstruct_from_topes,
    refinement_closure,
    topes,
    type_of_point,
    vertices,
)


def main(argv: list[str]) -> None:
    n = int(argv[0]) if argv else 3
    d = int(argv[1]) if len(argv) > 1 else 3
    seed = int(argv[2]) if len(argv) > 2 else 20260819
    arr = random_generic_arrangement(n, d, seed=seed)
    m = arrangement_tom(arr)
    print(f"seed {seed}: generic ({n},{d}) arrangement, {len(m)} types")

    report = check_axioms(m)
    print("axioms:", "pass" if report.ok else report)

    ts = TomTypeSet.from_types(topes(m))
    print(f"topes: {len(ts)}; reconstruct == original:",
          reconstruct_from_topes(ts) == m)

    vs = TomTypeSet.from_types(vertices(m))
    print(f"vertices: {len(vs)}; refinement closure == original:",
          refinement_closure(vs) == m)

    minors_ok = all(
        check_axioms(delete(m, i)).ok for i in range(1, n + 1)
    ) and all(check_axioms(contract(m, j)).ok for j in range(1, d + 1))
    print("all minors pass axioms:", minors_ok)

    dm = dual(m)
    print(f"dual has shape ({dm.n},{dm.d}); involution:", dual(dm) == m)
    print("dual o delete == contract o dual:",
          all(dual(delete(m, i)) == contract(dm, i) for i in range(1, n + 1)))

    # one elimination, just to show the geometry (points far out in two
    # different sectors, so the combination is forced to mix them)
    x, y = [5000] + [0] * (d - 1), [0] * (d - 1) + [5000]
    z, c = eliminate_points(arr, x, y, 1)
    print(f"eliminate {x} and {y} at position 1:")
    print(f"  {type_of_point(arr, x)} + {type_of_point(arr, y)} -> {c} at {z}")


if __name__ == "__main__":
    main(sys.argv[1:])
