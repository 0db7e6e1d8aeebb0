#!/usr/bin/env python3
"""Tour of one small arrangement: two tropical hyperplanes in the plane
of three directions.

Builds the arrangement with apexes (0,0,0) and (-2,0,-1), types a few
points, lists the full type set with its topes and vertices, converts it
to the dual subdivision (three spanning trees), and writes an SVG of the
mixed-cell picture next to this script.
"""

from __future__ import annotations

import pathlib

from tropom import (
    Arrangement,
    arrangement_tom,
    check_axioms,
    render_svg,
    tom_to_subdivision,
    topes,
    type_of_point,
    vertex_points,
    vertices,
)

OUT = pathlib.Path(__file__).with_name("prism.svg")


def main() -> None:
    arr = Arrangement.from_coords([[0, 0, 0], [-2, 0, -1]])
    print(f"arrangement: n={arr.n} hyperplanes, d={arr.d} directions")
    for apex in arr.apexes:
        print("  apex", tuple(str(c) for c in apex))

    print("\nsample points and their types:")
    for p in ([5, 0, 0], [-1, 0, 0], [-3, 4, 0]):
        print(f"  {p} -> {type_of_point(arr, p)}")

    m = arrangement_tom(arr)
    print(f"\nfull type set: {len(m)} types")
    for t in m:
        marks = []
        if t in set(topes(m)):
            marks.append("tope")
        if t in set(vertices(m)):
            marks.append("vertex")
        print(f"  {t}" + (f"   ({', '.join(marks)})" if marks else ""))

    report = check_axioms(m)
    print(f"\naxioms: {'all pass' if report.ok else 'FAIL'}")

    print("\nvertices sit at exact rational points:")
    for t, p in vertex_points(arr).items():
        print(f"  {t} at {p}")

    cells = tom_to_subdivision(m)
    print(f"\ndual subdivision: {len(cells.cells)} cells (spanning trees)")
    for cell in cells:
        print("  tree", list(cell.edge_list()))

    OUT.write_text(render_svg(cells), encoding="utf-8")
    print(f"\nwrote {OUT}")


if __name__ == "__main__":
    main()
