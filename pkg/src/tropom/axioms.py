"""The four axioms for sets of (n, d)-types, with witnesses.

A type set is a tropical oriented matroid when it satisfies:

* boundary      — every constant type (j, ..., j) is present;
* elimination   — for all A, B in the set and every position j there is a C
                  in the set with C_j = A_j ∪ B_j and every C_k one of
                  A_k, B_k, A_k ∪ B_k;
* comparability — the comparability graph of every pair is free of directed
                  cycles (closed walks using at least one one-way arc);
* surrounding   — every refinement of a member is a member.

``check_axioms`` sweeps all four and returns a report carrying witnesses for
whatever failed.  The elimination and comparability quantifiers are plain
nested loops over pairs of types, so they are vectorized with numpy; witness
reconstruction always goes back through the scalar code path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import (
    OrderedPartition,
    SearchSpaceTooLargeError,
    Semidigraph,
    TomTypeSet,
    Type,
    constant_type,
    elements_of,
)

_MAX_PARTITION_DIRECTIONS = 6
_MAX_PERMUTATION_DIRECTIONS = 8
_CHUNK = 128


# ---------------------------------------------------------------------------
# refinement


@lru_cache(maxsize=1 << 18)
def refine(a: Type, p: OrderedPartition) -> Type:
    """Refine a type along an ordered partition.

    Coordinate i of the result is A_i intersected with the last part of p
    that A_i meets.
    """
    if p.d != a.d:
        raise ValueError(f"partition of {p.d} directions against a d={a.d} type")
    coords = []
    for mask in a.coords:
        for part in reversed(p.parts):
            hit = mask & part
            if hit:
                coords.append(hit)
                break
    return Type(a.n, a.d, tuple(coords))


def total_refinements(a: Type) -> frozenset[Type]:
    """All refinements of a with every coordinate a singleton.

    One refinement per linear order on the directions (the partition into
    singletons in that order), deduplicated.
    """
    if a.d > _MAX_PERMUTATION_DIRECTIONS:
        raise SearchSpaceTooLargeError(
            f"{a.d}! singleton orders exceed the enumeration cap"
        )
    found: set[tuple[int, ...]] = set()
    for perm in itertools.permutations(range(a.d)):
        rank = [0] * a.d
        for r, j in enumerate(perm):
            rank[j] = r
        coords = []
        for mask in a.coords:
            best = max(elements_of(mask), key=lambda j: rank[j - 1])
            coords.append(1 << (best - 1))
        found.add(tuple(coords))
    return frozenset(Type(a.n, a.d, c) for c in found)


@lru_cache(maxsize=None)
def ordered_partitions(d: int) -> tuple[OrderedPartition, ...]:
    """Every ordered partition of {1, ..., d}, in a fixed canonical order."""
    if d > _MAX_PARTITION_DIRECTIONS:
        raise SearchSpaceTooLargeError(
            f"ordered partitions of {d} directions exceed the enumeration cap"
        )
    full = (1 << d) - 1

    def _gen(remaining: int):
        if remaining == 0:
            yield ()
            return
        sub = 0
        while True:
            sub = (sub - remaining) & remaining
            if sub == 0:
                break
            for rest in _gen(remaining & ~sub):
                yield (sub,) + rest

    return tuple(OrderedPartition(d, parts) for parts in _gen(full))


# ---------------------------------------------------------------------------
# comparability graphs


def comparability_graph(a: Type, b: Type) -> Semidigraph:
    """The mixed graph recording how a and b order the directions.

    For each position i and each pair j in A_i, k in B_i with j != k: an
    undirected edge {j, k} when both lie in A_i ∩ B_i, otherwise the one-way
    arc j -> k.
    """
    if (a.n, a.d) != (b.n, b.d):
        raise ValueError("comparability needs two types of the same shape")
    und: set[tuple[int, int]] = set()
    drc: set[tuple[int, int]] = set()
    for am, bm in zip(a.coords, b.coords):
        inter = am & bm
        for j in elements_of(am):
            jb = 1 << (j - 1)
            for k in elements_of(bm):
                if j == k:
                    continue
                if (inter & jb) and (inter >> (k - 1)) & 1:
                    und.add((j, k) if j < k else (k, j))
                else:
                    drc.add((j, k))
    return Semidigraph(a.d, frozenset(und), frozenset(drc))


def _strongly_connected(adj: dict[int, set[int]]) -> dict[int, int]:
    """Tarjan, iterative.  Returns a component id per vertex."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    comp: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    counter = itertools.count()
    comp_counter = itertools.count()

    for root in adj:
        if root in index:
            continue
        work = [(root, iter(sorted(adj[root])))]
        index[root] = low[root] = next(counter)
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = next(counter)
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(sorted(adj[w]))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                cid = next(comp_counter)
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp[w] = cid
                    if w == v:
                        break
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
    return comp


def find_directed_cycle(g: Semidigraph) -> list[int] | None:
    """A closed walk through at least one one-way arc, or None.

    The walk is returned as a vertex list with the start repeated at the
    end, e.g. [2, 3, 1, 2].
    """
    adj = g.arcs()
    comp = _strongly_connected(adj)
    for j, k in sorted(g.directed):
        if comp[j] != comp[k]:
            continue
        # walk back from k to j inside the component
        prev = {k: 0}
        queue = [k]
        while queue:
            v = queue.pop(0)
            if v == j:
                break
            for w in sorted(adj[v]):
                if w not in prev and comp[w] == comp[j]:
                    prev[w] = v
                    queue.append(w)
        path = [j]
        v = j
        while v != k:
            v = prev[v]
            path.append(v)
        path.reverse()  # now k ... j
        return [j] + path
    return None


def has_directed_cycle(g: Semidigraph) -> bool:
    """True when the mixed graph has a closed walk using a one-way arc."""
    return find_directed_cycle(g) is not None


def _cg_has_cycle(acoords: tuple[int, ...], bcoords: tuple[int, ...], d: int) -> bool:
    """Bitmask fast path for has_directed_cycle(comparability_graph(a, b))."""
    out = [0] * (d + 1)  # all arcs, 1-based
    strict_pairs: list[tuple[int, int]] = []
    for am, bm in zip(acoords, bcoords):
        inter = am & bm
        only_a = am & ~inter
        only_b = bm & ~inter
        if inter:
            for j in elements_of(inter):
                out[j] |= inter & ~(1 << (j - 1))
        if only_a and bm:
            for j in elements_of(only_a):
                tgt = bm & ~(1 << (j - 1))
                if tgt:
                    out[j] |= tgt
                    strict_pairs.append((j, tgt))
        if inter and only_b:
            for j in elements_of(inter):
                tgt = only_b & ~(1 << (j - 1))
                if tgt:
                    out[j] |= tgt
                    strict_pairs.append((j, tgt))
    if not strict_pairs:
        return False
    # reachability closure
    reach = out[:]
    changed = True
    while changed:
        changed = False
        for v in range(1, d + 1):
            acc = reach[v]
            grow = acc
            for w in elements_of(acc):
                grow |= reach[w]
            if grow != acc:
                reach[v] = grow
                changed = True
    for j, tgt in strict_pairs:
        jb = 1 << (j - 1)
        for k in elements_of(tgt):
            if reach[k] & jb:
                return True
    return False


# ---------------------------------------------------------------------------
# axiom sweeps


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of check_axioms, with witnesses for every failure."""

    n: int
    d: int
    size: int
    boundary_ok: bool
    boundary_missing: tuple[int, ...]
    elimination_ok: bool
    elimination_failures: tuple[tuple[Type, Type, int], ...]
    comparability_ok: bool
    comparability_failures: tuple[tuple[Type, Type, tuple[int, ...]], ...]
    surrounding_ok: bool
    surrounding_failures: tuple[tuple[Type, OrderedPartition], ...]

    @property
    def ok(self) -> bool:
        return (
            self.boundary_ok
            and self.elimination_ok
            and self.comparability_ok
            and self.surrounding_ok
        )

    def to_obj(self) -> dict:
        return {
            "ok": self.ok,
            "n": self.n,
            "d": self.d,
            "size": self.size,
            "boundary": {
                "ok": self.boundary_ok,
                "missing_directions": list(self.boundary_missing),
            },
            "elimination": {
                "ok": self.elimination_ok,
                "violations": [
                    {"a": a.to_obj(), "b": b.to_obj(), "position": j}
                    for a, b, j in self.elimination_failures
                ],
            },
            "comparability": {
                "ok": self.comparability_ok,
                "violations": [
                    {"a": a.to_obj(), "b": b.to_obj(), "cycle": list(cyc)}
                    for a, b, cyc in self.comparability_failures
                ],
            },
            "surrounding": {
                "ok": self.surrounding_ok,
                "violations": [
                    {"type": t.to_obj(), "partition": p.to_obj()}
                    for t, p in self.surrounding_failures
                ],
            },
        }


def elimination_witnesses(
    m: TomTypeSet, a: Type, b: Type, j: int
) -> tuple[Type, ...]:
    """All C in m with C_j = A_j | B_j and every C_k in {A_k, B_k, A_k | B_k},
    in canonical order."""
    if (a.n, a.d) != (m.n, m.d) or (b.n, b.d) != (m.n, m.d):
        raise ValueError("types do not match the set's shape")
    if not 1 <= j <= m.n:
        raise ValueError(f"position {j} out of range 1..{m.n}")
    union = tuple(x | y for x, y in zip(a.coords, b.coords))
    found = []
    for c in m.types:
        if c.coords[j - 1] != union[j - 1]:
            continue
        if all(
            ck in (ak, bk, uk)
            for ck, ak, bk, uk in zip(c.coords, a.coords, b.coords, union)
        ):
            found.append(c)
    return tuple(found)


def check_boundary(m: TomTypeSet) -> tuple[bool, tuple[int, ...]]:
    missing = tuple(
        j
        for j in range(1, m.d + 1)
        if not m.has_coords(constant_type(m.n, m.d, j).coords)
    )
    return not missing, missing


def check_elimination(m: TomTypeSet) -> tuple[bool, tuple[tuple[Type, Type, int], ...]]:
    k = len(m.types)
    if k == 0:
        return True, ()
    M = np.array([t.coords for t in m.types], dtype=np.uint64)  # (k, n)
    # eq_bb[b, c, i]: M[c, i] == M[b, i], shared across all rows a
    eq_bb = M[None, :, :] == M[:, None, :]
    failures: list[tuple[Type, Type, int]] = []
    for a in range(k):
        union = M[a][None, :] | M  # (k, n): union[b, i] = A_i | B_i
        eq_a = M == M[a][None, :]  # (k, n): eq_a[c, i]
        eq_u = M[None, :, :] == union[:, None, :]  # (k, k, n): eq_u[b, c, i]
        ok = (eq_a[None, :, :] | eq_bb | eq_u).all(axis=2)  # (k, k): ok[b, c]
        sat = (ok[:, :, None] & eq_u).any(axis=1)  # (k, n): sat[b, j]
        for b, j in zip(*np.nonzero(~sat)):
            failures.append((m.types[a], m.types[int(b)], int(j) + 1))
    return not failures, tuple(failures)


def check_comparability(
    m: TomTypeSet,
) -> tuple[bool, tuple[tuple[Type, Type, tuple[int, ...]], ...]]:
    k, n, d = len(m.types), m.n, m.d
    if k == 0:
        return True, ()
    X = np.zeros((k, n, d), dtype=np.uint8)
    for t_idx, t in enumerate(m.types):
        for i, mask in enumerate(t.coords):
            for j in elements_of(mask):
                X[t_idx, i, j - 1] = 1
    X16 = X.astype(np.int16)
    eye = np.eye(d, dtype=bool)
    bad_pairs: list[tuple[int, int]] = []
    for a0 in range(0, k, _CHUNK):
        a1 = min(a0 + _CHUNK, k)
        cnt_all = np.einsum("aij,bik->abjk", X16[a0:a1], X16)
        Z = (X[a0:a1, None, :, :] & X[None, :, :, :]).astype(np.int16)
        cnt_und = np.einsum("abij,abik->abjk", Z, Z)
        adj = (cnt_all > 0) & ~eye
        strict = (cnt_all > cnt_und) & ~eye
        reach = adj
        while True:
            step = np.matmul(reach.astype(np.uint8), reach.astype(np.uint8)) > 0
            nxt = reach | step
            if (nxt == reach).all():
                break
            reach = nxt
        bad = (strict & np.swapaxes(reach, 2, 3)).any(axis=(2, 3))
        for ra, rb in zip(*np.nonzero(bad)):
            a, b = a0 + int(ra), int(rb)
            if a <= b:
                bad_pairs.append((a, b))
    failures = []
    for a, b in sorted(bad_pairs):
        cycle = find_directed_cycle(comparability_graph(m.types[a], m.types[b]))
        failures.append((m.types[a], m.types[b], tuple(cycle or ())))
    return not failures, tuple(failures)


def check_surrounding(
    m: TomTypeSet,
) -> tuple[bool, tuple[tuple[Type, OrderedPartition], ...]]:
    parts = ordered_partitions(m.d)
    failures: list[tuple[Type, OrderedPartition]] = []
    for t in m.types:
        for p in parts:
            r = refine(t, p)
            if not m.has_coords(r.coords):
                failures.append((t, p))
    return not failures, tuple(failures)


def check_axioms(m: TomTypeSet) -> AxiomReport:
    """Run all four axioms over a type set and report witnesses."""
    b_ok, b_missing = check_boundary(m)
    e_ok, e_fail = check_elimination(m)
    c_ok, c_fail = check_comparability(m)
    s_ok, s_fail = check_surrounding(m)
    return AxiomReport(
        n=m.n,
        d=m.d,
        size=len(m),
        boundary_ok=b_ok,
        boundary_missing=b_missing,
        elimination_ok=e_ok,
        elimination_failures=e_fail,
        comparability_ok=c_ok,
        comparability_failures=c_fail,
        surrounding_ok=s_ok,
        surrounding_failures=s_fail,
    )
