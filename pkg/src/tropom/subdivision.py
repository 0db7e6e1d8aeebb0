"""Subdivisions of the product of two simplices, encoded as collections of
subgraphs of the complete bipartite graph K_{n,d}.

A collection of cells is a subdivision exactly when

(1) every cell spans (covers all n + d vertices, connected) — and, for a
    triangulation, is a spanning tree;
(2) every interior facet of a cell is matched: removing the facet-defining
    edges leaves either a boundary face (some vertex isolated) or a subgraph
    contained in another cell;
(3) no two cells admit an alternating cycle using an edge outside their
    intersection (orient one cell left-to-right, the other right-to-left:
    no directed cycle with four or more arcs may leave the shared edges).

Triangulation mode takes cell facets to be single-edge removals (every bond
of a tree is one edge).  General mode enumerates bonds as vertex
bipartitions with connected sides, keeping only one-directional cuts (all
crossing edges from one side's left vertices to the other side's rights) —
the cuts that actually support a face of the product polytope."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .axioms import AxiomReport, check_axioms
from .core import (
    EmptyLeftVertexError,
    NotATriangulationError,
    SearchSpaceTooLargeError,
    TomTypeSet,
    Type,
    elements_of,
)
from .structure import vertices

# Spanning-tree budget for the triangulation census.  1000 admits every
# shape that finishes in seconds; the first shapes past it ((4,4), (3,5))
# have millions of triangulations and would run for hours.
_ENUM_CAP = 1000

Edge = tuple[int, int]


# ---------------------------------------------------------------------------
# cells


@dataclass(frozen=True)
class BipartiteSubgraph:
    """A nonempty set of edges (i, j) of K_{n,d}, 1-based on both sides."""

    n: int
    d: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if not isinstance(self.edges, frozenset):
            object.__setattr__(self, "edges", frozenset(self.edges))
        if not self.edges:
            raise ValueError("a cell needs at least one edge")
        for i, j in self.edges:
            if not 1 <= i <= self.n:
                raise ValueError(f"left vertex {i} out of range 1..{self.n}")
            if not 1 <= j <= self.d:
                raise ValueError(f"right vertex {j} out of range 1..{self.d}")

    @classmethod
    def from_obj(cls, obj: object, n: int, d: int) -> "BipartiteSubgraph":
        if not isinstance(obj, list):
            raise ValueError("a cell is an array of [i, j] edges")
        edges = []
        for entry in obj:
            if not (isinstance(entry, list) and len(entry) == 2):
                raise ValueError(f"not an edge: {entry!r}")
            edges.append((entry[0], entry[1]))
        return cls(n, d, frozenset(edges))

    def to_obj(self) -> list[list[int]]:
        return [[i, j] for i, j in self.edge_list()]

    def edge_list(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def left_masks(self) -> tuple[int, ...]:
        rows = [0] * self.n
        for i, j in self.edges:
            rows[i - 1] |= 1 << (j - 1)
        return tuple(rows)

    def __str__(self) -> str:
        return "{" + ", ".join(f"{i}{j}" if self.d <= 9 and self.n <= 9 else f"({i},{j})"
                               for i, j in self.edge_list()) + "}"


def type_to_subgraph(a: Type) -> BipartiteSubgraph:
    """Edges (i, j) for every direction j in coordinate i."""
    edges = frozenset(
        (i, j) for i, mask in enumerate(a.coords, start=1) for j in elements_of(mask)
    )
    return BipartiteSubgraph(a.n, a.d, edges)


def subgraph_to_type(g: BipartiteSubgraph) -> Type:
    """Coordinate i collects the right ends of i's edges; every left vertex
    must be covered."""
    rows = g.left_masks()
    for i, mask in enumerate(rows, start=1):
        if mask == 0:
            raise EmptyLeftVertexError(i)
    return Type(g.n, g.d, rows)


@dataclass(frozen=True)
class SubgraphCollection:
    """A set of cells over a common K_{n,d}, canonically ordered."""

    n: int
    d: int
    cells: tuple[BipartiteSubgraph, ...]

    def __post_init__(self) -> None:
        pool: dict[tuple[Edge, ...], BipartiteSubgraph] = {}
        for cell in self.cells:
            if not isinstance(cell, BipartiteSubgraph):
                raise TypeError(f"not a cell: {cell!r}")
            if (cell.n, cell.d) != (self.n, self.d):
                raise ValueError(
                    f"cell on K_({cell.n},{cell.d}) in a K_({self.n},{self.d}) collection"
                )
            pool[cell.edge_list()] = cell
        object.__setattr__(
            self, "cells", tuple(pool[k] for k in sorted(pool))
        )

    @classmethod
    def from_obj(cls, obj: object) -> "SubgraphCollection":
        if not isinstance(obj, dict):
            raise ValueError("a collection is an object with n, d, cells")
        try:
            n, d, raw = obj["n"], obj["d"], obj["cells"]
        except KeyError as exc:
            raise ValueError(f"missing key {exc.args[0]!r}") from None
        if not isinstance(raw, list) or not raw:
            raise ValueError("cells must be a nonempty array")
        cells = tuple(BipartiteSubgraph.from_obj(entry, n, d) for entry in raw)
        return cls(n, d, cells)

    def to_obj(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "cells": [cell.to_obj() for cell in self.cells],
        }

    def __iter__(self):
        return iter(self.cells)

    def __len__(self) -> int:
        return len(self.cells)


# ---------------------------------------------------------------------------
# graph helpers (vertices 0..n-1 on the left, n..n+d-1 on the right)


def _adjacency(n: int, d: int, edges: frozenset[Edge]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n + d)]
    for i, j in edges:
        adj[i - 1].append(n + j - 1)
        adj[n + j - 1].append(i - 1)
    return adj


def _covers_and_connected(n: int, d: int, edges: frozenset[Edge]) -> bool:
    adj = _adjacency(n, d, edges)
    if any(not neigh for neigh in adj):
        return False
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n + d


def _has_isolated_vertex(n: int, d: int, edges: frozenset[Edge]) -> bool:
    touched: set[int] = set()
    for i, j in edges:
        touched.add(i - 1)
        touched.add(n + j - 1)
    return len(touched) < n + d


def _is_spanning_tree(n: int, d: int, edges: frozenset[Edge]) -> bool:
    return len(edges) == n + d - 1 and _covers_and_connected(n, d, edges)


def _alternating_cycle(
    ta: frozenset[Edge], tb: frozenset[Edge], n: int, d: int
) -> tuple[Edge, ...] | None:
    """A violating alternating cycle between two cells, or None.

    Arcs go left-to-right along ta and right-to-left along tb; a violation
    is a simple directed cycle of length >= 4 using an edge outside ta & tb.
    """
    shared = ta & tb
    arcs: list[list[tuple[int, Edge]]] = [[] for _ in range(n + d)]
    for i, j in sorted(ta):
        arcs[i - 1].append((n + j - 1, (i, j)))
    for i, j in sorted(tb):
        arcs[n + j - 1].append((i - 1, (i, j)))

    def dfs(
        start: int, v: int, visited: set[int], trail: list[Edge]
    ) -> tuple[Edge, ...] | None:
        for w, e in arcs[v]:
            if w == start:
                if len(trail) + 1 >= 4:
                    cyc = trail + [e]
                    if any(edge not in shared for edge in cyc):
                        return tuple(cyc)
                continue
            if w > start and w not in visited:
                visited.add(w)
                trail.append(e)
                got = dfs(start, w, visited, trail)
                if got is not None:
                    return got
                trail.pop()
                visited.remove(w)
        return None

    for start in range(n + d):
        got = dfs(start, start, {start}, [])
        if got is not None:
            return got
    return None


# ---------------------------------------------------------------------------
# the subdivision test


@dataclass(frozen=True)
class SubdivisionReport:
    """Outcome of check_subdivision, with witnesses per condition."""

    n: int
    d: int
    cell_count: int
    triangulation_mode: bool
    spanning_ok: bool
    spanning_violations: tuple[tuple[int, str], ...]
    facet_ok: bool
    facet_violations: tuple[tuple[int, tuple[Edge, ...]], ...]
    alternating_ok: bool
    alternating_violations: tuple[tuple[int, int, tuple[Edge, ...]], ...]
    note: str

    @property
    def ok(self) -> bool:
        return self.spanning_ok and self.facet_ok and self.alternating_ok

    def to_obj(self) -> dict:
        return {
            "ok": self.ok,
            "n": self.n,
            "d": self.d,
            "cells": self.cell_count,
            "triangulation_mode": self.triangulation_mode,
            "spanning": {
                "ok": self.spanning_ok,
                "violations": [
                    {"cell": idx, "reason": reason}
                    for idx, reason in self.spanning_violations
                ],
            },
            "facets": {
                "ok": self.facet_ok,
                "violations": [
                    {"cell": idx, "facet": [list(e) for e in fac]}
                    for idx, fac in self.facet_violations
                ],
            },
            "alternating": {
                "ok": self.alternating_ok,
                "violations": [
                    {"cells": [a, b], "cycle": [list(e) for e in cyc]}
                    for a, b, cyc in self.alternating_violations
                ],
            },
            "note": self.note,
        }


def _facet_candidates_tree(cell: BipartiteSubgraph) -> list[frozenset[Edge]]:
    return [cell.edges - {e} for e in sorted(cell.edges)]


def _side_connected(adj: list[list[int]], members: list[int], side: set[int]) -> bool:
    if not members:
        return False
    seen = {members[0]}
    stack = [members[0]]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w in side and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(members)


def _facet_candidates_general(cell: BipartiteSubgraph) -> list[frozenset[Edge]]:
    """Bond complements that are one-directional cuts, i.e. candidate faces."""
    n, d = cell.n, cell.d
    nv = n + d
    adj = _adjacency(n, d, cell.edges)
    out: list[frozenset[Edge]] = []
    seen: set[frozenset[Edge]] = set()
    for assign in range(1, 1 << (nv - 1)):
        side1 = {v for v in range(1, nv) if (assign >> (v - 1)) & 1}
        side0 = set(range(nv)) - side1
        crossing = set()
        direction: set[int] = set()
        for i, j in cell.edges:
            li, rj = i - 1, n + j - 1
            s_l = li in side1
            s_r = rj in side1
            if s_l != s_r:
                crossing.add((i, j))
                direction.add(s_l)
        if not crossing or len(direction) == 2:
            continue
        if not _side_connected(adj, sorted(side0), side0):
            continue
        if not _side_connected(adj, sorted(side1), side1):
            continue
        rest = cell.edges - crossing
        if rest in seen:
            continue
        seen.add(rest)
        out.append(rest)
    return out


def check_subdivision(
    c: SubgraphCollection, triangulation: bool = False
) -> SubdivisionReport:
    """Test the three subdivision conditions, collecting witnesses."""
    n, d = c.n, c.d
    cells = c.cells

    spanning_viol: list[tuple[int, str]] = []
    for idx, cell in enumerate(cells, start=1):
        if not _covers_and_connected(n, d, cell.edges):
            spanning_viol.append((idx, "does not span (cover + connect) K_{n,d}"))
        elif triangulation and len(cell.edges) != n + d - 1:
            spanning_viol.append(
                (idx, f"{len(cell.edges)} edges, a spanning tree needs {n + d - 1}")
            )

    facet_viol: list[tuple[int, tuple[Edge, ...]]] = []
    for idx, cell in enumerate(cells, start=1):
        candidates = (
            _facet_candidates_tree(cell)
            if triangulation
            else _facet_candidates_general(cell)
        )
        for rest in candidates:
            if not rest or _has_isolated_vertex(n, d, rest):
                continue  # boundary facet
            if any(
                rest <= other.edges
                for k, other in enumerate(cells, start=1)
                if k != idx
            ):
                continue
            facet_viol.append((idx, tuple(sorted(rest))))

    alt_viol: list[tuple[int, int, tuple[Edge, ...]]] = []
    for (ia, ca), (ib, cb) in itertools.combinations(enumerate(cells, start=1), 2):
        cyc = _alternating_cycle(ca.edges, cb.edges, n, d)
        if cyc is not None:
            alt_viol.append((ia, ib, cyc))

    return SubdivisionReport(
        n=n,
        d=d,
        cell_count=len(cells),
        triangulation_mode=triangulation,
        spanning_ok=not spanning_viol,
        spanning_violations=tuple(spanning_viol),
        facet_ok=not facet_viol,
        facet_violations=tuple(facet_viol),
        alternating_ok=not alt_viol,
        alternating_violations=tuple(alt_viol),
        note=""
        if triangulation
        else "general-mode facets are one-directional bond complements",
    )


# ---------------------------------------------------------------------------
# conversions


def tom_to_subdivision(m: TomTypeSet) -> SubgraphCollection:
    """The dual subdivision: one cell per zero-dimensional type."""
    verts = vertices(m)
    if not verts:
        raise ValueError("the type set has no zero-dimensional types")
    return SubgraphCollection(
        m.n, m.d, tuple(type_to_subgraph(v) for v in verts)
    )


def _nonempty_submasks(mask: int) -> list[int]:
    subs = []
    sub = 0
    while True:
        sub = (sub - mask) & mask
        if sub == 0:
            return subs
        subs.append(sub)


def triangulation_types(c: SubgraphCollection) -> TomTypeSet:
    """The type set of a triangulation: all row-subset selections of cells.

    For each cell, each coordinate independently picks a nonempty subset of
    the cell's incident directions; the results are pooled over all cells.
    """
    report = check_subdivision(c, triangulation=True)
    if not report.ok:
        raise NotATriangulationError(
            "the collection fails the triangulation conditions"
        )
    coords_seen: dict[tuple[int, ...], Type] = {}
    for cell in c.cells:
        per_row = [_nonempty_submasks(mask) for mask in cell.left_masks()]
        for combo in itertools.product(*per_row):
            if combo not in coords_seen:
                coords_seen[combo] = Type(c.n, c.d, combo)
    return TomTypeSet(c.n, c.d, tuple(coords_seen.values()))


# ---------------------------------------------------------------------------
# enumeration


def _all_spanning_trees(n: int, d: int) -> list[frozenset[Edge]]:
    edges_all = [(i, j) for i in range(1, n + 1) for j in range(1, d + 1)]
    need = n + d - 1
    return sorted(
        (
            frozenset(combo)
            for combo in itertools.combinations(edges_all, need)
            if _is_spanning_tree(n, d, frozenset(combo))
        ),
        key=sorted,
    )


def enumerate_triangulations(n: int, d: int) -> tuple[SubgraphCollection, ...]:
    """Every triangulation of the product of simplices, canonically ordered.

    Depth-first facet matching: seed each spanning tree, repeatedly find the
    first unmatched interior facet and branch over the compatible trees that
    complete it; a finished collection is kept only when its minimal cell is
    the seed, so each triangulation is produced exactly once.
    """
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    if n ** (d - 1) * d ** (n - 1) > _ENUM_CAP:
        raise SearchSpaceTooLargeError(
            f"K_({n},{d}) has {n ** (d - 1) * d ** (n - 1)} spanning trees,"
            f" over the cap of {_ENUM_CAP}"
        )
    trees = _all_spanning_trees(n, d)
    k = len(trees)

    compatible = [[False] * k for _ in range(k)]
    for a in range(k):
        compatible[a][a] = True
        for b in range(a + 1, k):
            ok = _alternating_cycle(trees[a], trees[b], n, d) is None
            compatible[a][b] = compatible[b][a] = ok

    facet_owners: dict[frozenset[Edge], list[int]] = {}
    internal_facets: list[list[frozenset[Edge]]] = []
    for ti, t in enumerate(trees):
        mine = []
        for e in sorted(t):
            s = t - {e}
            if _has_isolated_vertex(n, d, s):
                continue
            mine.append(s)
            facet_owners.setdefault(s, []).append(ti)
        internal_facets.append(mine)

    results: set[frozenset[int]] = set()

    def extend(seed: int, chosen: list[int], chosen_set: set[int]) -> None:
        for ti in sorted(chosen_set):
            for s in internal_facets[ti]:
                if any(o != ti and o in chosen_set for o in facet_owners[s]):
                    continue
                # unmatched facet: branch over its other owners
                for cand in facet_owners[s]:
                    if cand == ti or cand <= seed or cand in chosen_set:
                        continue
                    if not all(compatible[cand][x] for x in chosen):
                        continue
                    chosen.append(cand)
                    chosen_set.add(cand)
                    extend(seed, chosen, chosen_set)
                    chosen.pop()
                    chosen_set.remove(cand)
                return
        if min(chosen_set) == seed:
            results.add(frozenset(chosen_set))

    for seed in range(k):
        extend(seed, [seed], {seed})

    collections = [
        SubgraphCollection(
            n, d, tuple(BipartiteSubgraph(n, d, trees[ti]) for ti in combo)
        )
        for combo in results
    ]
    collections.sort(key=lambda col: tuple(cell.edge_list() for cell in col.cells))
    return tuple(collections)


# ---------------------------------------------------------------------------
# the conjecture probe


@dataclass(frozen=True)
class ProbeReport:
    """Axiom status of every triangulation's type set for one (n, d)."""

    n: int
    d: int
    triangulation_count: int
    axiom_failures: tuple[tuple[int, AxiomReport], ...]
    injective: bool
    collisions: tuple[tuple[int, int], ...]

    @property
    def ok(self) -> bool:
        return not self.axiom_failures and self.injective

    def to_obj(self) -> dict:
        return {
            "ok": self.ok,
            "n": self.n,
            "d": self.d,
            "triangulations": self.triangulation_count,
            "axiom_failures": [
                {"index": idx, "report": rep.to_obj()}
                for idx, rep in self.axiom_failures
            ],
            "injective": self.injective,
            "collisions": [list(pair) for pair in self.collisions],
        }


def conjecture_probe(n: int, d: int) -> ProbeReport:
    """Check that every triangulation's type set satisfies the axioms and
    that distinct triangulations give distinct type sets."""
    tris = enumerate_triangulations(n, d)
    failures: list[tuple[int, AxiomReport]] = []
    seen: dict[frozenset[tuple[int, ...]], int] = {}
    collisions: list[tuple[int, int]] = []
    for idx, tri in enumerate(tris, start=1):
        tom = triangulation_types(tri)
        report = check_axioms(tom)
        if not report.ok:
            failures.append((idx, report))
        key = frozenset(t.coords for t in tom)
        if key in seen:
            collisions.append((seen[key], idx))
        else:
            seen[key] = idx
    return ProbeReport(
        n=n,
        d=d,
        triangulation_count=len(tris),
        axiom_failures=tuple(failures),
        injective=not collisions,
        collisions=tuple(collisions),
    )
