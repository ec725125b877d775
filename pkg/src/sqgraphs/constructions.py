"""Weighted Turan-type constructions and their exact part-size optimization.

A construction member for parameters (a, r, d) partitions the vertices
into r ordered parts: pairs inside part 0 (the "light" part) get weight
a-d, pairs inside any other part get weight a, and pairs crossing two
parts get weight a+1.  This module builds members, optimizes the part
sizes exactly for edge sum and edge product, and assembles the iterated
variants where the light part is recursively replaced by a member for
reduced parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .multigraph import Multigraph, Params, pair_rank


@dataclass(frozen=True)
class OptResult:
    """Exact optimum over part sizes with the full argmax set.

    argmax is the lexicographically least optimal composition; every
    composition is canonical (parts 1..r-1 sorted nonincreasing, part 0
    kept distinguished).
    """

    value: int
    argmax: tuple[int, ...]
    all_argmax: tuple[tuple[int, ...], ...]


def check_sizes(params: Params, sizes: Sequence[int]) -> tuple[int, ...]:
    sz = tuple(sizes)
    if len(sz) != params.r:
        raise ValueError(f"expected {params.r} part sizes, got {len(sz)}")
    if any((not isinstance(v, int)) or v < 0 for v in sz):
        raise ValueError(f"part sizes must be nonnegative integers: {sz}")
    return sz


def compositions(params: Params, n: int) -> Iterator[tuple[int, ...]]:
    """Canonical part-size compositions of n: light part free, tail nonincreasing.

    Parts 1..r-1 are interchangeable, so restricting the tail to
    nonincreasing order cuts the enumeration by the (r-1)! symmetry.
    Zero part sizes are allowed (the member degenerates to fewer parts).
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    r = params.r
    if r == 1:
        yield (n,)
        return

    def tails(total: int, slots: int, cap: int) -> Iterator[tuple[int, ...]]:
        if slots == 1:
            if total <= cap:
                yield (total,)
            return
        lo = -(-total // slots)  # smallest feasible leading value
        for head in range(min(cap, total), lo - 1, -1):
            for rest in tails(total - head, slots - 1, head):
                yield (head,) + rest

    for v0 in range(n + 1):
        for tail in tails(n - v0, r - 1, n - v0):
            yield (v0,) + tail


def _pair_counts(params: Params, sizes: Sequence[int]) -> tuple[int, int, int]:
    """(light pairs, middle pairs, cross pairs) for the given composition."""
    sz = check_sizes(params, sizes)
    n = sum(sz)
    light = math.comb(sz[0], 2)
    middle = sum(math.comb(v, 2) for v in sz[1:])
    cross = math.comb(n, 2) - light - middle
    return light, middle, cross


def construction_sum(params: Params, sizes: Sequence[int]) -> int:
    light, middle, cross = _pair_counts(params, sizes)
    a, d = params.a, params.d
    return (a - d) * light + a * middle + (a + 1) * cross


def construction_product(params: Params, sizes: Sequence[int]) -> int:
    # a zero light-part weight annihilates the product as soon as light > 0
    light, middle, cross = _pair_counts(params, sizes)
    a, d = params.a, params.d
    return (a - d) ** light * a ** middle * (a + 1) ** cross


def turan_multigraph(params: Params, sizes: Sequence[int]) -> Multigraph:
    """Build the construction member with the given part sizes.

    Vertices are labeled block by block: part 0 first, then parts 1..r-1.
    """
    sz = check_sizes(params, sizes)
    n = sum(sz)
    if n < 1:
        raise ValueError("construction needs at least one vertex")
    part_of = []
    for idx, v in enumerate(sz):
        part_of.extend([idx] * v)
    a, d = params.a, params.d
    weights = [0] * (n * (n - 1) // 2)
    for j in range(1, n):
        for i in range(j):
            if part_of[i] != part_of[j]:
                w = a + 1
            elif part_of[i] == 0:
                w = a - d
            else:
                w = a
            weights[pair_rank(i, j)] = w
    return Multigraph(n, weights)


def max_edge_sum(params: Params, n: int) -> OptResult:
    """Exact maximum edge sum over all compositions, with the argmax set."""
    best = None
    arg: list[tuple[int, ...]] = []
    for comp in compositions(params, n):
        val = construction_sum(params, comp)
        if best is None or val > best:
            best, arg = val, [comp]
        elif val == best:
            arg.append(comp)
    arg.sort()
    return OptResult(best, arg[0], tuple(arg))


def max_edge_product(params: Params, n: int) -> OptResult:
    """Exact maximum edge product over all compositions.

    Comparisons are exact.  For large n a float log-score prefilter drops
    compositions that are clearly dominated (margin far above the float
    error) and only the surviving candidates are compared as integers.
    """
    comps = list(compositions(params, n))
    a, d = params.a, params.d
    finalists = comps
    if n > 60:
        scores = []
        log_ad, log_a, log_a1 = math.log(a - d), math.log(a), math.log(a + 1)
        for comp in comps:
            light, middle, cross = _pair_counts(params, comp)
            scores.append((log_ad * light + log_a * middle + log_a1 * cross, comp))
        top = max(s for s, _ in scores)
        # 1e-6 log-margin dwarfs accumulated float error at these sizes
        finalists = [comp for s, comp in scores if s >= top - 1e-6]
    best = None
    arg: list[tuple[int, ...]] = []
    for comp in finalists:
        val = construction_product(params, comp)
        if best is None or val > best:
            best, arg = val, [comp]
        elif val == best:
            arg.append(comp)
    arg.sort()
    return OptResult(best, arg[0], tuple(arg))


def optimum_to_dict(params: Params, n: int, opt: OptResult) -> dict:
    """JSON-able export of an optimization result (values as decimal strings)."""
    return {
        "n": n,
        "params": {"a": params.a, "r": params.r, "d": params.d},
        "value": str(opt.value),
        "argmax": list(opt.argmax),
        "all_argmax": [list(c) for c in opt.all_argmax],
    }


@dataclass(frozen=True)
class IteratedSpec:
    """Nested construction: each level replaces the previous light part.

    levels is a sequence of (r, d) pairs; level k runs at base value
    a - (d_1 + ... + d_{k-1}).  Each level must be valid on its own
    (in particular every weight it places stays >= 1).  The light part of
    the last level remains a constant-weight clique of terminal_weight.
    """

    a: int
    levels: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not self.levels:
            raise ValueError("need at least one level")
        self.level_params()  # Params validation raises on a bad level

    def level_params(self) -> list[Params]:
        out = []
        a = self.a
        for r, d in self.levels:
            out.append(Params(a, r, d))
            a -= d
        return out

    @property
    def terminal_weight(self) -> int:
        return self.a - sum(d for _, d in self.levels)


def iterated_multigraph(spec: IteratedSpec, sizes_by_level: Sequence[Sequence[int]]) -> Multigraph:
    """Build the nested construction with explicit sizes at every level.

    Level 0 sizes must sum to the total vertex count; the sizes of each
    deeper level must sum to the light-part size of the level above.  A
    single level reproduces turan_multigraph exactly.
    """
    level_params = spec.level_params()
    if len(sizes_by_level) != len(level_params):
        raise ValueError(
            f"expected sizes for {len(level_params)} levels, got {len(sizes_by_level)}"
        )
    all_sizes = [check_sizes(p, s) for p, s in zip(level_params, sizes_by_level)]
    for k in range(1, len(all_sizes)):
        if sum(all_sizes[k]) != all_sizes[k - 1][0]:
            raise ValueError(
                f"level {k} sizes sum to {sum(all_sizes[k])}, expected the "
                f"light-part size {all_sizes[k - 1][0]} of level {k - 1}"
            )
    n = sum(all_sizes[0])
    if n < 1:
        raise ValueError("construction needs at least one vertex")
    base = turan_multigraph(level_params[0], all_sizes[0])
    weights = list(base.weights())
    for k in range(1, len(all_sizes)):
        block = sum(all_sizes[k])  # light part of the level above = vertices 0..block-1
        if block == 0:
            break
        if block == 1:
            continue
        inner = turan_multigraph(level_params[k], all_sizes[k])
        for j in range(1, block):
            for i in range(j):
                weights[pair_rank(i, j)] = inner.weight(i, j)
    return Multigraph(n, weights)
