"""Arrangements of n tropical hyperplanes in (d-1)-dimensional tropical
space, with exact rational arithmetic throughout.

An apex row v_i assigns one rational to each direction; points and apexes
are gauge-fixed so the last coordinate is 0 (only coordinate differences
matter).  The type of a point x records, for each apex, the set of
directions attaining max_j (x_j - v_ij)."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import TomTypeSet, Type, elements_of, mask_from_elements
from .structure import is_vertex, refinement_closure

_Q = Fraction


def _as_fraction(value: object) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise ValueError(f"not an exact rational: {value!r}")


def _normalize(coords: Sequence[object]) -> tuple[Fraction, ...]:
    row = tuple(_as_fraction(c) for c in coords)
    if not row:
        raise ValueError("a point needs at least one coordinate")
    last = row[-1]
    return tuple(c - last for c in row)


@dataclass(frozen=True)
class Point:
    """A point of tropical (d-1)-space, last coordinate fixed to 0."""

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", _normalize(self.coords))

    @property
    def d(self) -> int:
        return len(self.coords)

    @classmethod
    def from_obj(cls, obj: object) -> "Point":
        if not isinstance(obj, list) or not obj:
            raise ValueError("a point is a nonempty array of rationals")
        return cls(tuple(obj))

    def to_obj(self) -> list[str]:
        return [str(c) for c in self.coords]

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class Arrangement:
    """n apex rows over d directions, each row gauge-fixed to end in 0."""

    n: int
    d: int
    apexes: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"need at least one hyperplane, got n={self.n}")
        if not isinstance(self.d, int) or self.d < 1:
            raise ValueError(f"need at least one direction, got d={self.d}")
        rows = tuple(self.apexes)
        if len(rows) != self.n:
            raise ValueError(f"expected {self.n} apex rows, got {len(rows)}")
        fixed = []
        for i, row in enumerate(rows, start=1):
            if len(row) != self.d:
                raise ValueError(f"apex row {i} has {len(row)} entries, expected {self.d}")
            fixed.append(_normalize(row))
        object.__setattr__(self, "apexes", tuple(fixed))

    @classmethod
    def from_coords(cls, rows: Iterable[Sequence[object]]) -> "Arrangement":
        rows = tuple(tuple(r) for r in rows)
        if not rows:
            raise ValueError("need at least one apex row")
        return cls(len(rows), len(rows[0]), rows)

    @classmethod
    def from_obj(cls, obj: object) -> "Arrangement":
        if not isinstance(obj, dict):
            raise ValueError("an arrangement is an object with n, d, apexes")
        try:
            n, d, raw = obj["n"], obj["d"], obj["apexes"]
        except KeyError as exc:
            raise ValueError(f"missing key {exc.args[0]!r}") from None
        if not isinstance(raw, list):
            raise ValueError("apexes must be an array of rows")
        return cls(n, d, tuple(tuple(row) for row in raw))

    def to_obj(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "apexes": [[str(c) for c in row] for row in self.apexes],
        }

    @property
    def has_coincident_apexes(self) -> bool:
        """True when two hyperplanes share an apex (a degenerate arrangement)."""
        return len(set(self.apexes)) < self.n


# ---------------------------------------------------------------------------
# point types


def type_of_point(arr: Arrangement, x: Point | Sequence[object]) -> Type:
    """For every apex, the set of directions attaining max_j (x_j - v_ij)."""
    p = x if isinstance(x, Point) else Point(tuple(x))
    if p.d != arr.d:
        raise ValueError(f"point has {p.d} coordinates, arrangement has {arr.d}")
    coords = []
    for row in arr.apexes:
        diffs = [xj - vj for xj, vj in zip(p.coords, row)]
        top = max(diffs)
        coords.append(mask_from_elements(
            (j for j, v in enumerate(diffs, start=1) if v == top), arr.d
        ))
    return Type(arr.n, arr.d, tuple(coords))


# ---------------------------------------------------------------------------
# vertices


def _solve_unique(
    rows: Sequence[tuple[Sequence[Fraction], Fraction]], nvars: int
) -> tuple[Fraction, ...] | None:
    """Gauss-Jordan over the rationals; None unless exactly one solution."""
    mat = [list(coefs) + [rhs] for coefs, rhs in rows]
    pivots: list[int] = []
    r = 0
    for c in range(nvars):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    for i in range(r, len(mat)):
        if mat[i][nvars] != 0:
            return None
    if len(pivots) < nvars:
        return None
    sol = [Fraction(0)] * nvars
    for row_idx, c in enumerate(pivots):
        sol[c] = mat[row_idx][nvars]
    return tuple(sol)


def _walls(arr: Arrangement) -> list[tuple[list[Fraction], Fraction]]:
    """Linear conditions x_j - x_k = v_ij - v_ik in the chart x_d = 0."""
    rows = []
    for row in arr.apexes:
        for j, k in itertools.combinations(range(1, arr.d + 1), 2):
            coefs = [Fraction(0)] * (arr.d - 1)
            if j < arr.d:
                coefs[j - 1] += 1
            if k < arr.d:
                coefs[k - 1] -= 1
            rows.append((coefs, row[j - 1] - row[k - 1]))
    return rows


def vertex_points(arr: Arrangement) -> dict[Type, Point]:
    """The zero-dimensional cells: their types and witness points.

    Candidate points are the unique solutions of (d-1)-subsets of wall
    conditions; a candidate is a vertex exactly when its type is
    zero-dimensional.
    """
    walls = _walls(arr)
    nvars = arr.d - 1
    seen: set[tuple[Fraction, ...]] = set()
    out: dict[Type, Point] = {}
    for subset in itertools.combinations(walls, nvars):
        sol = _solve_unique(subset, nvars)
        if sol is None or sol in seen:
            continue
        seen.add(sol)
        p = Point(sol + (Fraction(0),))
        t = type_of_point(arr, p)
        if is_vertex(t):
            out[t] = p
    return out


def enumerate_vertex_types(arr: Arrangement) -> frozenset[Type]:
    return frozenset(vertex_points(arr))


def arrangement_tom(arr: Arrangement) -> TomTypeSet:
    """The type set of the arrangement: the refinement closure of its
    vertex types."""
    verts = enumerate_vertex_types(arr)
    if not verts:
        raise ValueError("arrangement has no vertices")
    return refinement_closure(verts)


# ---------------------------------------------------------------------------
# geometric elimination


def _anchored(arr: Arrangement, p: Point, j: int, direction: int) -> tuple[Fraction, ...]:
    shift = p.coords[direction - 1] - arr.apexes[j - 1][direction - 1]
    return tuple(c - shift for c in p.coords)


def eliminate_points(
    arr: Arrangement, x: Point | Sequence[object], y: Point | Sequence[object], j: int
) -> tuple[Point, Type]:
    """Combine two points at position j by anchoring and maxima.

    Both points are translated so the j-th maximum is attained at value 0
    (anchored at the smallest direction of their j-th coordinate); the
    coordinatewise maximum of the translates is returned with its type.
    """
    if not 1 <= j <= arr.n:
        raise ValueError(f"position {j} out of range 1..{arr.n}")
    px = x if isinstance(x, Point) else Point(tuple(x))
    py = y if isinstance(y, Point) else Point(tuple(y))
    a = elements_of(type_of_point(arr, px).coords[j - 1])[0]
    b = elements_of(type_of_point(arr, py).coords[j - 1])[0]
    sx = _anchored(arr, px, j, a)
    sy = _anchored(arr, py, j, b)
    z = Point(tuple(max(u, v) for u, v in zip(sx, sy)))
    return z, type_of_point(arr, z)


def eliminate_points_all(
    arr: Arrangement, x: Point | Sequence[object], y: Point | Sequence[object], j: int
) -> tuple[tuple[Point, Type], ...]:
    """Every anchored combination of the two points at position j, one per
    pair of anchoring directions, deduplicated and canonically ordered."""
    if not 1 <= j <= arr.n:
        raise ValueError(f"position {j} out of range 1..{arr.n}")
    px = x if isinstance(x, Point) else Point(tuple(x))
    py = y if isinstance(y, Point) else Point(tuple(y))
    ta = type_of_point(arr, px)
    tb = type_of_point(arr, py)
    found: dict[tuple[Fraction, ...], tuple[Point, Type]] = {}
    for a in elements_of(ta.coords[j - 1]):
        sx = _anchored(arr, px, j, a)
        for b in elements_of(tb.coords[j - 1]):
            sy = _anchored(arr, py, j, b)
            z = Point(tuple(max(u, v) for u, v in zip(sx, sy)))
            if z.coords not in found:
                found[z.coords] = (z, type_of_point(arr, z))
    return tuple(found[k] for k in sorted(found))


# ---------------------------------------------------------------------------
# genericity and random generation


def is_generic(arr: Arrangement) -> bool:
    """Apexes pairwise distinct and every vertex type a spanning tree of the
    incidence graph (n + d - 1 incidences), i.e. the dual subdivision is a
    triangulation."""
    if arr.has_coincident_apexes:
        return False
    target = arr.n + arr.d - 1
    return all(
        sum(m.bit_count() for m in t.coords) == target
        for t in enumerate_vertex_types(arr)
    )


def random_arrangement(
    n: int, d: int, rng: random.Random, bound: int = 1000
) -> Arrangement:
    """One arrangement with integer apex entries drawn uniformly from
    [-bound, bound] (then gauge-fixed)."""
    rows = [[Fraction(rng.randint(-bound, bound)) for _ in range(d)] for _ in range(n)]
    return Arrangement(n, d, tuple(tuple(r) for r in rows))


def random_generic_arrangement(
    n: int,
    d: int,
    seed: int | None = None,
    bound: int = 1000,
    max_tries: int = 1000,
    rng: random.Random | None = None,
) -> Arrangement:
    """Rejection-sample random_arrangement until is_generic holds."""
    if rng is None:
        rng = random.Random(seed)
    for _ in range(max_tries):
        arr = random_arrangement(n, d, rng, bound=bound)
        if is_generic(arr):
            return arr
    raise RuntimeError(f"no generic arrangement found in {max_tries} draws")
