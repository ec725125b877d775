"""Detection of good pattern copies inside a multigraph.

A good copy of an ordinary graph H at base weight a is a vertex set of
size |V(H)| on which (i) every pair has weight at least a, and (ii) the
pairs of weight exactly a+1 induce a graph isomorphic to H.  Condition
(ii) is an exact (induced) requirement: pairs off the pattern must avoid
weight a+1 but may sit at a or above a+1.

Detection is specialized to the pattern family that matters here
(complete multipartite graphs, the 5-cycle, the 4-vertex path, and
complete triple-part graphs with one cross edge removed); there is no
general isomorphism service.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .multigraph import Multigraph


@dataclass(frozen=True)
class CompleteMultipartite:
    """Complete multipartite pattern with the given part sizes."""

    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.sizes or any((not isinstance(t, int)) or t < 1 for t in self.sizes):
            raise ValueError(f"part sizes must be positive integers: {self.sizes}")

    @property
    def order(self) -> int:
        return sum(self.sizes)


@dataclass(frozen=True)
class Cycle5:
    """The 5-cycle."""

    order = 5


@dataclass(frozen=True)
class Path4:
    """The path on 4 vertices."""

    order = 4


@dataclass(frozen=True)
class TriplesMinusEdge:
    """Complete r-partite pattern with all parts of size 3, minus one edge."""

    r: int

    def __post_init__(self) -> None:
        if self.r < 2:
            raise ValueError(f"need r >= 2, got {self.r}")

    @property
    def order(self) -> int:
        return 3 * self.r


Pattern = CompleteMultipartite | Cycle5 | Path4 | TriplesMinusEdge


def _multipartite_search(
    G: Multigraph,
    a: int,
    sizes: Sequence[int],
    pool: Sequence[int],
    allow_missing: bool,
) -> tuple[tuple[tuple[int, ...], ...], tuple[int, int] | None] | None:
    """First part tuple realizing the multipartite pattern, in scan order.

    Parts are combinations in ascending lexicographic order; parts of
    equal size are kept in ascending order of their smallest element so
    each unordered arrangement is produced once.  With allow_missing,
    exactly one cross pair must carry a weight other than a+1 (still at
    least a).
    """
    parts: list[tuple[int, ...]] = []
    state = {"missing": None}

    def part_ok(cand: tuple[int, ...]) -> bool:
        for u, v in combinations(cand, 2):
            w = G.weight(u, v)
            if w < a or w == a + 1:
                return False
        return True

    def cross_ok(cand: tuple[int, ...]) -> tuple[bool, tuple[int, int] | None]:
        used = None
        for p in parts:
            for u in p:
                for v in cand:
                    w = G.weight(u, v)
                    if w == a + 1:
                        continue
                    if not allow_missing or w < a:
                        return False, None
                    if state["missing"] is not None or used is not None:
                        return False, None
                    used = (min(u, v), max(u, v))
        return True, used

    def rec(k: int, available: tuple[int, ...]) -> bool:
        if k == len(sizes):
            return state["missing"] is not None or not allow_missing
        size = sizes[k]
        floor = -1
        for earlier, p in enumerate(parts):
            if sizes[earlier] == size:
                floor = p[0]
        for cand in combinations(available, size):
            if cand[0] <= floor:
                continue
            if not part_ok(cand):
                continue
            ok, used = cross_ok(cand)
            if not ok:
                continue
            if used is not None:
                state["missing"] = used
            parts.append(cand)
            if rec(k + 1, tuple(v for v in available if v not in cand)):
                return True
            parts.pop()
            if used is not None:
                state["missing"] = None
        return False

    if rec(0, tuple(sorted(pool))):
        return tuple(parts), state["missing"]
    return None


def _level_edges_within(G: Multigraph, a: int, xs: Sequence[int]) -> list[tuple[int, int]] | None:
    """Weight-(a+1) pairs inside xs, or None if some pair drops below a."""
    edges = []
    for u, v in combinations(xs, 2):
        w = G.weight(u, v)
        if w < a:
            return None
        if w == a + 1:
            edges.append((u, v))
    return edges


def _cycle_order(xs: Sequence[int], edges: list[tuple[int, int]]) -> tuple[int, ...] | None:
    """xs listed around the cycle if edges form one, starting at the minimum."""
    adj: dict[int, list[int]] = {v: [] for v in xs}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    if any(len(nb) != 2 for nb in adj.values()):
        return None
    start = min(xs)
    order = [start, min(adj[start])]
    while len(order) < len(xs):
        prev, cur = order[-2], order[-1]
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        if nxt in order:
            return None
        order.append(nxt)
    # close the cycle
    if order[0] not in adj[order[-1]]:
        return None
    return tuple(order)


def _path_order(xs: Sequence[int], edges: list[tuple[int, int]]) -> tuple[int, ...] | None:
    """xs listed along the path if edges form one, from the smaller endpoint."""
    if len(edges) != len(xs) - 1:
        return None
    adj: dict[int, list[int]] = {v: [] for v in xs}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    ends = [v for v in xs if len(adj[v]) == 1]
    if len(ends) != 2 or any(len(adj[v]) > 2 for v in xs):
        return None
    order = [min(ends)]
    while len(order) < len(xs):
        nbs = [v for v in adj[order[-1]] if v not in order]
        if len(nbs) != 1:
            return None
        order.append(nbs[0])
    return tuple(order)


def find_good_copy(
    G: Multigraph,
    a: int,
    pattern: Pattern,
    within: Iterable[int] | None = None,
):
    """First good copy of the pattern inside `within`, or None.

    Returns parts for multipartite patterns, an ordered vertex tuple for
    the cycle and the path, and (parts, missing_pair) for the
    triple-parts-minus-edge pattern.  Absence is a normal result, never
    an error.  The realization returned is the first one in a fixed
    ascending scan, so results are deterministic.
    """
    if a < 0:
        raise ValueError("base weight must be >= 0")
    pool = sorted(set(range(G.n) if within is None else within))
    for v in pool:
        G._check_vertex(v)
    if pattern.order > len(pool):
        return None

    if isinstance(pattern, CompleteMultipartite):
        hit = _multipartite_search(G, a, pattern.sizes, pool, allow_missing=False)
        return None if hit is None else hit[0]

    if isinstance(pattern, TriplesMinusEdge):
        return _multipartite_search(G, a, (3,) * pattern.r, pool, allow_missing=True)

    if isinstance(pattern, Cycle5):
        for xs in combinations(pool, 5):
            edges = _level_edges_within(G, a, xs)
            if edges is None or len(edges) != 5:
                continue
            order = _cycle_order(xs, edges)
            if order is not None:
                return order
        return None

    if isinstance(pattern, Path4):
        for xs in combinations(pool, 4):
            edges = _level_edges_within(G, a, xs)
            if edges is None or len(edges) != 3:
                continue
            order = _path_order(xs, edges)
            if order is not None:
                return order
        return None

    raise ValueError(f"unknown pattern {pattern!r}")
