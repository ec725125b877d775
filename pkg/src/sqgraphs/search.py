"""Exact extremal search over locally sparse multigraphs.

Computes the maximum edge sum and the maximum edge product over all
(s,q)-graphs on n labeled vertices by branch-and-bound over weight
assignments, counts the family exactly on tiny instances, and provides a
fully independent brute-force oracle used to validate the pruned
engines.  All values are exact integers; products use arbitrary
precision throughout.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

import numpy as np

from .constructions import max_edge_product, max_edge_sum, turan_multigraph
from .multigraph import Multigraph, Params, pair_rank

ENGINE_VERSION = "1"

DEFAULT_NODE_BUDGET = 20_000_000
DEFAULT_ORACLE_BUDGET = 50_000_000

_MODES = ("sum", "product", "count")


class BudgetExceededError(RuntimeError):
    """Raised when an exact computation would exceed its resource budget."""


class _BudgetHit(Exception):
    pass


@dataclass
class SearchOutcome:
    """Result of one extremal computation.

    value is exact; witness (when present) realizes it and satisfies the
    sparsity bound.  optimal=False marks a budget-bound run whose value
    is only a lower bound.
    """

    mode: str
    value: int
    witness: Multigraph | None
    optimal: bool
    stats: dict = field(default_factory=dict)


def _validate(n: int, s: int, q: int) -> None:
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if not 2 <= s <= n:
        raise ValueError(f"need 2 <= s <= n, got s={s}, n={n}")
    if q < 0:
        raise ValueError(f"need q >= 0, got {q}")


@lru_cache(maxsize=None)
def _amgm(total: int, count: int) -> int:
    """Max product of `count` nonnegative integers with sum at most `total`."""
    if count == 0:
        return 1
    if total <= 0:
        return 0
    base, extra = divmod(total, count)
    return base ** (count - extra) * (base + 1) ** extra


@lru_cache(maxsize=None)
def _sym_tables(n: int) -> dict[int, tuple[tuple[int, ...], ...]]:
    """Pair-index permutations for adjacent vertex swaps of complete prefixes.

    For each block of vertices {0..j} (complete once pair (j-1, j) is
    assigned) and each transposition (i, i+1) with i < j, maps every pair
    rank inside the block to the rank of the swapped pair.
    """
    out: dict[int, tuple[tuple[int, ...], ...]] = {}
    for j in range(1, n):
        block_pairs = [(x, y) for y in range(1, j + 1) for x in range(y)]
        last = pair_rank(j - 1, j)
        sigmas = []
        for i in range(j):
            swap = {i: i + 1, i + 1: i}
            sigma = tuple(
                pair_rank(swap.get(x, x), swap.get(y, y)) for x, y in block_pairs
            )
            sigmas.append(sigma)
        out[last] = tuple(sigmas)
    return out


def _seed_witnesses(n: int, s: int, q: int, mode: str) -> list[Multigraph]:
    """Feasible starting incumbents: constant graph plus construction optima.

    Every construction whose s-vertex optimum stays within q is feasible
    on n vertices because induced subsets of a member are members at the
    smaller size.
    """
    spairs = s * (s - 1) // 2
    seeds = [Multigraph.constant(n, q // spairs)]
    seen = {seeds[0].weights()}
    amax = q // spairs + 1
    for a in range(1, amax + 1):
        for r in range(1, s + 1):
            for d in range(0, a):
                params = Params(a, r, d)
                if max_edge_sum(params, s).value > q:
                    continue
                opt = (
                    max_edge_product(params, n)
                    if mode == "product"
                    else max_edge_sum(params, n)
                )
                g = turan_multigraph(params, opt.argmax)
                if g.weights() not in seen:
                    seen.add(g.weights())
                    seeds.append(g)
    return [g for g in seeds if g.satisfies(s, q)]


def _graph_value(G: Multigraph, mode: str) -> int:
    return G.edge_product() if mode == "product" else G.edge_sum()


def _run_search(
    n: int, s: int, q: int, mode: str, node_budget: int
) -> SearchOutcome:
    t0 = time.perf_counter()
    _validate(n, s, q)
    P = n * (n - 1) // 2
    spairs = s * (s - 1) // 2
    product = mode == "product"
    wlo = 1 if (product and q >= spairs) else 0

    ssets = list(combinations(range(n), s))
    S = len(ssets)
    sset_pairs = [
        tuple(sorted(pair_rank(u, v) for u, v in combinations(X, 2))) for X in ssets
    ]
    cover: list[list[int]] = [[] for _ in range(P)]
    for xid, prs in enumerate(sset_pairs):
        for e in prs:
            cover[e].append(xid)

    seeds = _seed_witnesses(n, s, q, mode)
    inc_wit = max(seeds, key=lambda g: _graph_value(g, mode))
    inc_val = _graph_value(inc_wit, mode)

    rem = [q] * S
    m = [spairs] * S
    W = [0] * P
    sym = _sym_tables(n)
    stats = {"nodes": 0, "bound_prunes": 0, "symmetry_prunes": 0}

    def ub_of(e: int) -> int:
        best = None
        for X in cover[e]:
            cand = rem[X] - (m[X] - 1) * wlo
            if best is None or cand < best:
                best = cand
        return best

    def prune_by_bound(k: int, acc: int) -> bool:
        ubs = []
        for e in range(k, P):
            u = ub_of(e)
            if u < wlo:
                return True
            ubs.append(u)
        if product:
            base = acc
            for u in ubs:
                base *= u
            if base <= inc_val:
                return True
            for X in range(S):
                mx = m[X]
                if mx == 0:
                    continue
                px = 1
                for e in sset_pairs[X]:
                    if e >= k:
                        px *= ubs[e - k]
                alt = _amgm(rem[X], mx)
                if alt < px and (base // px) * alt <= inc_val:
                    return True
            return False
        base = acc + sum(ubs)
        if base <= inc_val:
            return True
        for X in range(S):
            if m[X] == 0:
                continue
            sx = 0
            for e in sset_pairs[X]:
                if e >= k:
                    sx += ubs[e - k]
            if rem[X] < sx and base - sx + rem[X] <= inc_val:
                return True
        return False

    def sym_ok(k: int) -> bool:
        tables = sym.get(k)
        if tables is None:
            return True
        for sigma in tables:
            for t in range(k + 1):
                a, b = W[t], W[sigma[t]]
                if a != b:
                    if a < b:
                        return False
                    break
        return True

    def dfs(k: int, acc: int) -> None:
        nonlocal inc_val, inc_wit
        if k == P:
            if acc > inc_val:
                inc_val = acc
                inc_wit = Multigraph(n, W)
            return
        if prune_by_bound(k, acc):
            stats["bound_prunes"] += 1
            return
        hi = ub_of(k)
        for w in range(hi, wlo - 1, -1):
            stats["nodes"] += 1
            if stats["nodes"] > node_budget:
                raise _BudgetHit
            W[k] = w
            for X in cover[k]:
                rem[X] -= w
                m[X] -= 1
            if sym_ok(k):
                dfs(k + 1, acc * w if product else acc + w)
            else:
                stats["symmetry_prunes"] += 1
            for X in cover[k]:
                rem[X] += w
                m[X] += 1

    optimal = True
    try:
        dfs(0, 1 if product else 0)
    except _BudgetHit:
        optimal = False

    # soundness: re-verify the winning witness on an independent code path
    if inc_wit.find_violation(s, q) is not None:
        raise RuntimeError("engine produced an infeasible witness")
    if _graph_value(inc_wit, mode) != inc_val:
        raise RuntimeError("engine value does not match its witness")

    stats["wall_time"] = time.perf_counter() - t0
    stats["seeds"] = len(seeds)
    stats["source"] = "search"
    return SearchOutcome(mode=mode, value=inc_val, witness=inc_wit, optimal=optimal, stats=stats)


def max_sum_search(
    n: int, s: int, q: int, node_budget: int = DEFAULT_NODE_BUDGET
) -> SearchOutcome:
    """Exact maximum edge sum over all (s,q)-graphs on n vertices."""
    return _run_search(n, s, q, "sum", node_budget)


def max_product_search(
    n: int, s: int, q: int, node_budget: int = DEFAULT_NODE_BUDGET
) -> SearchOutcome:
    """Exact maximum edge product over all (s,q)-graphs on n vertices."""
    return _run_search(n, s, q, "product", node_budget)


def count_graphs(n: int, s: int, q: int, node_budget: int = DEFAULT_NODE_BUDGET) -> int:
    """Exact number of (s,q)-graphs on n labeled vertices.

    Any pair lies inside some s-set, so weights are implicitly bounded by
    q and the count is finite.  Raises BudgetExceededError rather than
    ever returning a truncated count.
    """
    _validate(n, s, q)
    P = n * (n - 1) // 2
    spairs = s * (s - 1) // 2
    ssets = list(combinations(range(n), s))
    S = len(ssets)
    sset_pairs = [
        tuple(sorted(pair_rank(u, v) for u, v in combinations(X, 2))) for X in ssets
    ]
    cover: list[list[int]] = [[] for _ in range(P)]
    for xid, prs in enumerate(sset_pairs):
        for e in prs:
            cover[e].append(xid)

    rem = [q] * S
    m = [spairs] * S
    # ssets with >= 2 unassigned pairs; once none remain the tail factors
    state = {"nodes": 0, "pending": S if spairs >= 2 else 0}

    def ub_of(e: int) -> int:
        return min(rem[X] for X in cover[e])

    def dfs(k: int) -> int:
        state["nodes"] += 1
        if state["nodes"] > node_budget:
            raise BudgetExceededError(
                f"count({n},{s},{q}) exceeded the node budget of {node_budget}"
            )
        if k == P:
            return 1
        if state["pending"] == 0:
            total = 1
            for e in range(k, P):
                u = ub_of(e)
                if u < 0:
                    return 0
                total *= u + 1
            return total
        ub = ub_of(k)
        if ub < 0:
            return 0
        total = 0
        for w in range(ub + 1):
            for X in cover[k]:
                rem[X] -= w
                m[X] -= 1
                if m[X] == 1:
                    state["pending"] -= 1
            total += dfs(k + 1)
            for X in cover[k]:
                rem[X] += w
                if m[X] == 1:
                    state["pending"] += 1
                m[X] += 1
        return total

    return dfs(0)


# ---------------------------------------------------------------------------
# brute-force oracle
# ---------------------------------------------------------------------------

_CHUNK = 1 << 18


def _bf_table(n: int, cap: int, budget: int) -> dict[int, dict]:
    """Exhaustive per-(n, cap) enumeration, aggregated by max s-set sum.

    For every s in 2..n and every possible value m of the maximum s-set
    sum, records how many assignments attain it and the best total
    sum/product among them (with a witness index).  Queries for any
    q <= cap then reduce to prefix aggregation.
    """
    P = n * (n - 1) // 2
    radix = cap + 1
    total = radix ** P
    if total > budget:
        raise BudgetExceededError(
            f"brute force over {total} assignments exceeds the budget of {budget}"
        )
    shift = total + 1
    if (cap * P + 1) * shift >= 1 << 62 or (cap ** P + 1) * shift >= 1 << 62:
        raise BudgetExceededError(
            "instance too large for exact vectorized enumeration"
        )

    incidence = {}
    for s in range(2, n + 1):
        rows = []
        for X in combinations(range(n), s):
            row = np.zeros(P, dtype=np.int64)
            for u, v in combinations(X, 2):
                row[pair_rank(u, v)] = 1
            rows.append(row)
        incidence[s] = np.array(rows)

    tables = {
        s: {
            "count": np.zeros(cap * s * (s - 1) // 2 + 1, dtype=np.int64),
            "enc_sum": np.full(cap * s * (s - 1) // 2 + 1, -1, dtype=np.int64),
            "enc_prod": np.full(cap * s * (s - 1) // 2 + 1, -1, dtype=np.int64),
        }
        for s in range(2, n + 1)
    }

    pows = radix ** np.arange(P, dtype=np.int64)
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        W = (idx[:, None] // pows[None, :]) % radix
        sums = W.sum(axis=1)
        prods = np.multiply.reduce(W, axis=1)
        tiebreak = total - idx  # larger means smaller index
        enc_sum = sums * shift + tiebreak
        enc_prod = prods * shift + tiebreak
        for s in range(2, n + 1):
            mvals = (W @ incidence[s].T).max(axis=1)
            tab = tables[s]
            tab["count"] += np.bincount(mvals, minlength=len(tab["count"]))
            np.maximum.at(tab["enc_sum"], mvals, enc_sum)
            np.maximum.at(tab["enc_prod"], mvals, enc_prod)
    return {"tables": tables, "total": total, "shift": shift, "radix": radix, "P": P}


@lru_cache(maxsize=8)
def _bf_table_cached(n: int, cap: int, budget: int) -> dict:
    return _bf_table(n, cap, budget)


def _decode_assignment(n: int, idx: int, radix: int) -> Multigraph:
    P = n * (n - 1) // 2
    weights = []
    for _ in range(P):
        idx, w = divmod(idx, radix)
        weights.append(w)
    # index decodes least-significant pair first, matching colex pair order
    return Multigraph(n, weights)


def brute_force(
    n: int,
    s: int,
    q: int,
    mode: str,
    weight_cap: int,
    budget: int = DEFAULT_ORACLE_BUDGET,
) -> SearchOutcome:
    """Full enumeration over all weight assignments with entries <= weight_cap.

    No pruning beyond the per-edge cap: every one of the (cap+1)^C(n,2)
    assignments is generated and tested.  With weight_cap = q the result
    is the unrestricted optimum, since any pair lies inside an s-set.
    Used only to validate the pruned engines.
    """
    t0 = time.perf_counter()
    _validate(n, s, q)
    if mode not in _MODES:
        raise ValueError(f"mode must be one of {_MODES}, got {mode!r}")
    if weight_cap < 0:
        raise ValueError("weight_cap must be >= 0")

    data = _bf_table_cached(n, weight_cap, budget)
    tab = data["tables"][s]
    hi = min(q, len(tab["count"]) - 1)
    stats = {
        "nodes": data["total"],
        "bound_prunes": 0,
        "symmetry_prunes": 0,
        "source": "oracle",
    }

    if mode == "count":
        value = int(tab["count"][: hi + 1].sum())
        stats["wall_time"] = time.perf_counter() - t0
        return SearchOutcome("count", value, None, True, stats)

    enc = tab["enc_sum"] if mode == "sum" else tab["enc_prod"]
    best = int(enc[: hi + 1].max())
    if best < 0:
        raise RuntimeError("no feasible assignment found (unreachable: 0 is feasible)")
    shift = data["shift"]
    value = best // shift
    idx = data["total"] - (best % shift)
    witness = _decode_assignment(n, idx, data["radix"])
    if witness.find_violation(s, q) is not None:
        raise RuntimeError("oracle produced an infeasible witness")
    if _graph_value(witness, mode) != value:
        raise RuntimeError("oracle value does not match its witness")
    stats["wall_time"] = time.perf_counter() - t0
    return SearchOutcome(mode, value, witness, True, stats)


# ---------------------------------------------------------------------------
# result cache
# ---------------------------------------------------------------------------


def cache_record(n: int, s: int, q: int, outcome: SearchOutcome) -> dict:
    return {
        "key": {"n": n, "s": s, "q": q, "mode": outcome.mode},
        "value": str(outcome.value),
        "optimal": outcome.optimal,
        "witness": outcome.witness.to_dict() if outcome.witness else None,
        "stats": {
            k: v for k, v in outcome.stats.items() if isinstance(v, (int, float, str))
        },
        "engine_version": ENGINE_VERSION,
    }


def append_cache(path: str, record: dict) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps(record, separators=(",", ":"), sort_keys=True) + "\n")
        fh.flush()


def load_cache(path: str) -> dict[tuple, dict]:
    """Latest record per key, keeping only this engine version."""
    out: dict[tuple, dict] = {}
    try:
        fh = open(path, "r", encoding="utf-8")
    except FileNotFoundError:
        return out
    with fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            if rec.get("engine_version") != ENGINE_VERSION:
                continue
            key = rec["key"]
            out[(key["n"], key["s"], key["q"], key["mode"])] = rec
    return out


def cached_outcome(path: str, n: int, s: int, q: int, mode: str) -> SearchOutcome | None:
    """Reload an optimal cached outcome, or None if absent or non-optimal."""
    rec = load_cache(path).get((n, s, q, mode))
    if rec is None or not rec.get("optimal"):
        return None
    witness = Multigraph.from_dict(rec["witness"]) if rec.get("witness") else None
    stats = dict(rec.get("stats", {}))
    stats["source"] = "cache"
    return SearchOutcome(mode, int(rec["value"]), witness, True, stats)
