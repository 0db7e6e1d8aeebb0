#!/usr/bin/env python3
"""Count triangulations of small simplex products and draw the planar ones.

For each small (n, d) the census is enumerated and, when d = 3, every
triangulation is rendered to demos/out/tri_<n>_3_<k>.svg together with a
transition-rule verification. The axiom probe at the end re-checks that
every census entry yields a lawful type set and that no two entries
collide.
"""

from __future__ import annotations

import pathlib

from tropom import (
    conjecture_probe,
    embed,
    enumerate_triangulations,
    render_svg,
    verify_transition_rules,
)

OUT = pathlib.Path(__file__).with_name("out")


def main() -> None:
    print("triangulation census:")
    for n, d in ((2, 2), (2, 3), (2, 4), (3, 3), (2, 5)):
        print(f"  ({n},{d}): {len(enumerate_triangulations(n, d))}")

    OUT.mkdir(exist_ok=True)
    for n in (2, 3):
        tris = enumerate_triangulations(n, 3)
        for k, c in enumerate(tris):
            rep = verify_transition_rules(c)
            assert rep.ok, (n, k)
            kinds = [cell.piece.kind for cell in embed(c)]
            path = OUT / f"tri_{n}_3_{k}.svg"
            path.write_text(render_svg(c), encoding="utf-8")
        print(f"rendered {len(tris)} pictures for n={n} "
              f"(last one: {kinds.count('triangle')} triangles, "
              f"{len(kinds) - kinds.count('triangle')} rhombi) -> {OUT}/")

    for n, d in ((2, 3), (3, 3)):
        rep = conjecture_probe(n, d)
        print(f"probe ({n},{d}): {'ok' if rep.ok else rep.to_obj()} "
              f"over {rep.triangulation_count} triangulations")


if __name__ == "__main__":
    main()
