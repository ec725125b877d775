"""Edge-weighted multigraphs with local sparsity checks.

A multigraph here is a complete graph on vertices 0..n-1 where every
unordered pair carries a nonnegative integer multiplicity (possibly 0).
A multigraph is an (s,q)-graph when every s-set of vertices supports at
most q edges counted with multiplicity.  This module provides the graph
type, exact sum/product queries, weight-level subgraphs, clone tests and
the shared JSON serialization format.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator


def pair_rank(i: int, j: int) -> int:
    """Colex rank of the unordered pair {i, j}: pairs inside {0..m} form a prefix."""
    if i == j:
        raise ValueError(f"not a pair: ({i}, {j})")
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def colex_pairs(n: int) -> list[tuple[int, int]]:
    """All pairs (i, j), i < j < n, listed in colex order (rank order)."""
    return [(i, j) for j in range(1, n) for i in range(j)]


@dataclass(frozen=True)
class Params:
    """Construction parameters: base multiplicity a, part count r, deficiency d.

    The derived grade s_base = (r-1)(d+1)+2 is the smallest subset size at
    which the sum-extremal behaviour of the family with these parameters
    separates from neighbouring parameter choices.
    """

    a: int
    r: int
    d: int

    def __post_init__(self) -> None:
        if self.a < 1:
            raise ValueError(f"a must be >= 1, got {self.a}")
        if self.r < 1:
            raise ValueError(f"r must be >= 1, got {self.r}")
        if not 0 <= self.d <= self.a - 1:
            raise ValueError(f"d must satisfy 0 <= d <= a-1, got d={self.d}, a={self.a}")

    @property
    def s_base(self) -> int:
        return (self.r - 1) * (self.d + 1) + 2


class Multigraph:
    """Immutable multigraph on vertices 0..n-1 with integer pair weights.

    Weights are stored densely in colex pair order; n stays small in all
    intended uses (exact search tops out well below n = 64), so the dense
    representation wins over anything sparse.
    """

    __slots__ = ("n", "_w")

    def __init__(self, n: int, weights: Iterable[int]):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {n!r}")
        w = tuple(weights)
        expected = n * (n - 1) // 2
        if len(w) != expected:
            raise ValueError(f"expected {expected} weights for n={n}, got {len(w)}")
        for x in w:
            if not isinstance(x, int) or x < 0:
                raise ValueError(f"weights must be nonnegative integers, got {x!r}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_w", w)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Multigraph is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, Multigraph) and self.n == other.n and self._w == other._w

    def __hash__(self) -> int:
        return hash((self.n, self._w))

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, weights={self._w})"

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, n: int, w: int) -> "Multigraph":
        return cls(n, [w] * (n * (n - 1) // 2))

    @classmethod
    def from_pair_weights(cls, n: int, mapping: dict[tuple[int, int], int]) -> "Multigraph":
        """Build from an explicit {pair: weight} map; unlisted pairs default to 0."""
        weights = [0] * (n * (n - 1) // 2)
        for (i, j), w in mapping.items():
            cls._check_vertex_static(n, i)
            cls._check_vertex_static(n, j)
            weights[pair_rank(i, j)] = w
        return cls(n, weights)

    # -- basic access ------------------------------------------------------

    @staticmethod
    def _check_vertex_static(n: int, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < n:
            raise ValueError(f"vertex {v!r} out of range 0..{n - 1}")

    def _check_vertex(self, v: int) -> None:
        self._check_vertex_static(self.n, v)

    def vertices(self) -> range:
        return range(self.n)

    def weight(self, u: int, v: int) -> int:
        self._check_vertex(u)
        self._check_vertex(v)
        return self._w[pair_rank(u, v)]

    def weights(self) -> tuple[int, ...]:
        """The full weight vector in colex pair order."""
        return self._w

    def pairs(self) -> Iterator[tuple[int, int, int]]:
        """Yield (i, j, weight) for every pair, i < j, in lexicographic order."""
        for i in range(self.n):
            for j in range(i + 1, self.n):
                yield i, j, self._w[pair_rank(i, j)]

    def max_weight(self) -> int:
        return max(self._w, default=0)

    def min_weight(self) -> int:
        return min(self._w, default=0)

    def _vertex_set(self, X: Iterable[int] | None) -> tuple[int, ...]:
        if X is None:
            return tuple(range(self.n))
        xs = sorted(set(X))
        for v in xs:
            self._check_vertex(v)
        return tuple(xs)

    # -- sums, products, degrees -------------------------------------------

    def edge_sum(self, X: Iterable[int] | None = None) -> int:
        """Sum of weights over pairs inside X (whole graph when X is None)."""
        xs = self._vertex_set(X)
        w = self._w
        return sum(w[pair_rank(u, v)] for u, v in combinations(xs, 2))

    def edge_product(self, X: Iterable[int] | None = None) -> int:
        """Product of weights over pairs inside X; 1 when |X| <= 1.  Exact."""
        xs = self._vertex_set(X)
        w = self._w
        out = 1
        for u, v in combinations(xs, 2):
            out *= w[pair_rank(u, v)]
            if out == 0:
                return 0
        return out

    def _cross_pairs(self, X: Iterable[int], Y: Iterable[int]) -> list[int]:
        xs = self._vertex_set(X)
        ys = self._vertex_set(Y)
        if set(xs) & set(ys):
            raise ValueError("cross sets must be disjoint")
        return [self._w[pair_rank(x, y)] for x in xs for y in ys]

    def cross_sum(self, X: Iterable[int], Y: Iterable[int]) -> int:
        return sum(self._cross_pairs(X, Y))

    def cross_product(self, X: Iterable[int], Y: Iterable[int]) -> int:
        out = 1
        for w in self._cross_pairs(X, Y):
            out *= w
            if out == 0:
                return 0
        return out

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return sum(self._w[pair_rank(u, v)] for u in range(self.n) if u != v)

    def product_degree(self, v: int) -> int:
        self._check_vertex(v)
        out = 1
        for u in range(self.n):
            if u != v:
                out *= self._w[pair_rank(u, v)]
        return out

    # -- weight levels -------------------------------------------------------

    def level_edges(self, m: int) -> frozenset[tuple[int, int]]:
        """Pairs (i, j), i < j, whose weight is exactly m (an ordinary graph)."""
        if m < 0:
            raise ValueError("level must be >= 0")
        return frozenset(
            (i, j) for i, j, w in self.pairs() if w == m
        )

    def level_neighborhood(
        self, v: int, m: int, within: Iterable[int] | None = None
    ) -> frozenset[int]:
        """Vertices x (in `within`, default all) with weight(v, x) exactly m."""
        self._check_vertex(v)
        if m < 0:
            raise ValueError("level must be >= 0")
        xs = self._vertex_set(within)
        return frozenset(x for x in xs if x != v and self._w[pair_rank(v, x)] == m)

    # -- local sparsity -------------------------------------------------------

    def find_violation(self, s: int, q: int) -> tuple[int, ...] | None:
        """Return one s-set with edge sum exceeding q, or None if none exists.

        Subsets are scanned in colex order; a branch is dropped as soon as
        its partial sum plus the best possible completion cannot exceed q,
        and a branch whose partial sum already exceeds q is completed with
        the smallest available vertices.  The scan is exhaustive: None
        means every s-set sums to at most q.
        """
        if not 2 <= s <= self.n:
            raise ValueError(f"need 2 <= s <= n, got s={s}, n={self.n}")
        if q < 0:
            raise ValueError("q must be >= 0")
        wmax = self.max_weight()
        total_pairs = s * (s - 1) // 2
        w = self._w
        chosen: list[int] = []

        def rec(limit: int, k: int, psum: int) -> tuple[int, ...] | None:
            done = len(chosen)
            remaining_pairs = total_pairs - done * (done - 1) // 2
            if psum + remaining_pairs * wmax <= q:
                return None
            if k == 0:
                return tuple(sorted(chosen)) if psum > q else None
            if psum > q:
                # any completion works: take the smallest k unused vertices
                return tuple(sorted(chosen + list(range(k))))
            for v in range(k - 1, limit):
                add = sum(w[pair_rank(u, v)] for u in chosen)
                chosen.append(v)
                hit = rec(v, k - 1, psum + add)
                chosen.pop()
                if hit is not None:
                    return hit
            return None

        return rec(self.n, s, 0)

    def satisfies(self, s: int, q: int) -> bool:
        """True iff every s-set of vertices supports at most q edges."""
        return self.find_violation(s, q) is None

    def max_subset_sum(self, s: int) -> tuple[int, tuple[int, ...]]:
        """Maximum edge sum over all s-sets, with the first maximizing set."""
        if not 2 <= s <= self.n:
            raise ValueError(f"need 2 <= s <= n, got s={s}, n={self.n}")
        best = -1
        best_set: tuple[int, ...] = ()
        for xs in combinations(range(self.n), s):
            val = self.edge_sum(xs)
            if val > best:
                best, best_set = val, xs
        return best, best_set

    # -- clones and row edits -------------------------------------------------

    def are_clones(self, u: int, v: int) -> bool:
        """True iff u and v have identical weights to every third vertex."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValueError("clone test needs two distinct vertices")
        w = self._w
        return all(
            w[pair_rank(u, z)] == w[pair_rank(v, z)]
            for z in range(self.n)
            if z != u and z != v
        )

    def with_weight(self, u: int, v: int, value: int) -> "Multigraph":
        self._check_vertex(u)
        self._check_vertex(v)
        if value < 0:
            raise ValueError("weight must be >= 0")
        new = list(self._w)
        new[pair_rank(u, v)] = value
        return Multigraph(self.n, new)

    def copied_row(self, source: int, target: int) -> "Multigraph":
        """New graph where target's weights to third vertices are copied from source.

        The weight of the pair {source, target} itself is left unchanged.
        """
        self._check_vertex(source)
        self._check_vertex(target)
        if source == target:
            raise ValueError("source and target must differ")
        new = list(self._w)
        for z in range(self.n):
            if z != source and z != target:
                new[pair_rank(target, z)] = self._w[pair_rank(source, z)]
        return Multigraph(self.n, new)

    # -- serialization ----------------------------------------------------------

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [[i, j, w] for i, j, w in self.pairs()]}

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "Multigraph":
        if not isinstance(data, dict) or "n" not in data or "edges" not in data:
            raise ValueError("multigraph document needs fields 'n' and 'edges'")
        n = data["n"]
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"invalid vertex count {n!r}")
        expected = n * (n - 1) // 2
        weights: list[int | None] = [None] * expected
        edges = data["edges"]
        if not isinstance(edges, list) or len(edges) != expected:
            raise ValueError(f"expected exactly {expected} edge entries, got {len(edges) if isinstance(edges, list) else type(edges)}")
        for entry in edges:
            if not (isinstance(entry, (list, tuple)) and len(entry) == 3):
                raise ValueError(f"bad edge entry {entry!r}")
            i, j, w = entry
            if not (isinstance(i, int) and isinstance(j, int) and 0 <= i < j < n):
                raise ValueError(f"bad pair ({i!r}, {j!r}) for n={n}")
            if not isinstance(w, int) or w < 0:
                raise ValueError(f"bad weight {w!r} on pair ({i}, {j})")
            r = pair_rank(i, j)
            if weights[r] is not None:
                raise ValueError(f"pair ({i}, {j}) listed twice")
            weights[r] = w
        return cls(n, weights)  # type: ignore[arg-type]

    @classmethod
    def loads(cls, text: str) -> "Multigraph":
        return cls.from_dict(json.loads(text))


def common_level_neighborhood(G: Multigraph, W: Iterable[int], m: int) -> frozenset[int]:
    """Vertices outside W joined to every member of W by weight exactly m."""
    ws = sorted(set(W))
    if not ws:
        raise ValueError("W must be nonempty")
    for v in ws:
        G._check_vertex(v)
    rest = [v for v in range(G.n) if v not in set(ws)]
    out = frozenset(rest)
    for v in ws:
        out &= G.level_neighborhood(v, m, within=rest)
        if not out:
            break
    return out
