"""Acceptance gate: ten binding checks, one printed line each.

Run `pytest tests/test_acceptance.py -v -s` to see the PASS/FAIL lines.
Everything is exact combinatorial equality — no tolerances — and the
whole file is budgeted to finish in well under five minutes.  The random
sweep (criterion 2) is built once per module and shared by the criteria
that quantify over "every type set from criterion 2"."""

from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path

import pytest

from tropom import (
    TomTypeSet,
    arrangement_tom,
    check_axioms,
    check_subdivision,
    conjecture_probe,
    contract,
    delete,
    dual,
    eliminate_points,
    embed,
    enumerate_triangulations,
    random_generic_arrangement,
    reconstruct_from_topes,
    refinement_closure,
    render_svg,
    tom_to_subdivision,
    topes,
    triangulation_types,
    type_of_point,
    verify_transition_rules,
    vertices,
)

import oracles
from helpers import (
    PRISM_TOPES,
    PRISM_VERTICES,
    prism_cells,
    prism_tom,
    typeset,
)

SHAPES = ((2, 3), (3, 3), (2, 4), (3, 4), (4, 3))
GOLDEN_SVG = Path(__file__).parent / "data" / "golden_prism.svg"


def report(num: int, ok: bool, detail: str) -> None:
    print(f"{'PASS' if ok else 'FAIL'} criterion-{num}: {detail}")
    assert ok, f"criterion-{num}: {detail}"


@pytest.fixture(scope="module")
def sweep():
    """The fifty seeded generic arrangements with their type sets."""
    out = []
    for n, d in SHAPES:
        for k in range(10):
            arr = random_generic_arrangement(n, d, seed=1000 * n + 100 * d + k)
            out.append((arr, arrangement_tom(arr)))
    return out


def test_criterion_1_golden_prism():
    generators = typeset(3, [("123", "1"), ("23", "13"), ("2", "123")])
    m = refinement_closure(generators)
    ok = (
        m == prism_tom()
        and len(m) == 17
        and set(topes(m)) == set(typeset(3, PRISM_TOPES))
        and check_axioms(m).ok
        and tom_to_subdivision(m) == prism_cells()
        and triangulation_types(prism_cells()) == m
        and set(vertices(m)) == set(typeset(3, PRISM_VERTICES))
    )
    report(1, ok, "vertex closure gives the 17-type prism set and its 3 trees")


def test_criterion_2_random_arrangements_pass_axioms(sweep):
    bad = [
        (arr.n, arr.d)
        for arr, m in sweep
        if not check_axioms(m).ok
    ]
    report(2, not bad, f"axioms hold for all 50 seeded arrangements {sorted(set(SHAPES))}")


def test_criterion_3_tope_reconstruction(sweep):
    eligible = [m for _, m in sweep if (2 ** m.d - 1) ** m.n <= 10**7]
    ok = len(eligible) == 50 and all(
        reconstruct_from_topes(TomTypeSet.from_types(topes(m))) == m
        for m in eligible
    )
    report(3, ok, "tope reconstruction is the identity on all 50 type sets")


def test_criterion_4_vertex_closure(sweep):
    ok = all(
        refinement_closure(TomTypeSet.from_types(vertices(m))) == m
        for _, m in sweep
    )
    report(4, ok, "refinement closure of the vertices is the identity on all 50")


def test_criterion_5_minors_pass_axioms(sweep):
    ok = True
    for _, m in sweep:
        for i in range(1, m.n + 1):
            ok = ok and check_axioms(delete(m, i)).ok
        for j in range(1, m.d + 1):
            ok = ok and check_axioms(contract(m, j)).ok
    report(5, ok, "every deletion and contraction of the 50 passes the axioms")


def test_criterion_6_subdivisions_check(sweep):
    ok = all(
        check_subdivision(tom_to_subdivision(m), triangulation=True).ok
        for _, m in sweep
    )
    report(6, ok, "dual subdivisions of all 50 satisfy the subdivision conditions")


def test_criterion_7_triangulation_census():
    t23 = enumerate_triangulations(2, 3)
    count_ok = len(t23) == 6 == oracles.transitive_tournament_count(3)
    probes_ok = all(
        conjecture_probe(n, d).ok for n, d in ((2, 2), (2, 3), (3, 3))
    )
    _, oracle33 = oracles.tilings_and_triangulations(3, 3)
    got33 = {
        frozenset(cell.edges for cell in c) for c in enumerate_triangulations(3, 3)
    }
    geometry_ok = len(got33) == 108 and got33 == oracle33
    report(
        7,
        count_ok and probes_ok and geometry_ok,
        "censuses: (2,3)=6 vs orders oracle, (3,3)=108 vs geometric oracle, "
        "all type sets pass axioms injectively",
    )


def test_criterion_8_elimination_geometry(sweep):
    ok = True
    for k in range(200):
        rng = random.Random(9000 + k)
        arr, m = sweep[k % len(sweep)]
        types = set(m)
        x = [rng.randint(-50, 50) for _ in range(arr.d)]
        y = [rng.randint(-50, 50) for _ in range(arr.d)]
        a, b = type_of_point(arr, x), type_of_point(arr, y)
        for j in range(1, arr.n + 1):
            z, c = eliminate_points(arr, x, y, j)
            ok = ok and c == type_of_point(arr, z)
            ok = ok and c.coords[j - 1] == a.coords[j - 1] | b.coords[j - 1]
            ok = ok and all(
                c.coords[i] in (a.coords[i], b.coords[i], a.coords[i] | b.coords[i])
                for i in range(arr.n)
            )
            ok = ok and c in types
    report(8, ok, "200 seeded point pairs eliminate correctly at every position")


def test_criterion_9_duality(sweep):
    ok = True
    for _, m in sweep:
        dm = dual(m)
        ok = ok and check_axioms(dm).ok
        ok = ok and dual(dm) == m
        for i in range(1, m.n + 1):
            ok = ok and dual(delete(m, i)) == contract(dm, i)
    report(9, ok, "dual passes axioms, is an involution, and swaps minors on all 50")


def doubled_area(poly):
    s = Fraction(0)
    for (u1, v1), (u2, v2) in zip(poly, poly[1:] + poly[:1]):
        s += u1 * v2 - u2 * v1
    return s


def test_criterion_10_rendering():
    ok = True
    for n in (2, 3):
        for c in enumerate_triangulations(n, 3):
            cells = embed(c)
            pieces = [cell.piece.kind for cell in cells]
            ok = ok and pieces.count("triangle") == n
            ok = ok and sum(doubled_area(cell.polygon) for cell in cells) == n * n
            rep = verify_transition_rules(c)
            ok = ok and rep.ok and rep.violations == ()
            ok = ok and render_svg(c) == render_svg(c)
    ok = ok and render_svg(prism_cells()) == GOLDEN_SVG.read_text(encoding="utf-8")
    report(
        10,
        ok,
        "all 114 d=3 triangulations embed, tile exactly, follow the transition "
        "rules, and render byte-stably",
    )
