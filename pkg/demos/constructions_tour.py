"""Tour of the weighted Turan-type constructions.

Builds part-weighted members, optimizes part sizes exactly for edge sum
and edge product, and shows how the optimal light-part size tracks its
closed-form fraction as n grows.

Run:  python demos/constructions_tour.py
"""

import math

from sqgraphs import constructions as C
from sqgraphs import formulas as F
from sqgraphs.multigraph import Params

print("=" * 72)
print("A construction member for (a, r, d) = (2, 2, 1) on 5 vertices")
print("=" * 72)
params = Params(2, 2, 1)
G = C.turan_multigraph(params, (2, 3))
print("part sizes (2, 3): light part {0,1} at weight 1, middle {2,3,4} at 2,")
print("cross pairs at 3")
for i, j, w in G.pairs():
    print(f"  w({i},{j}) = {w}")
print(f"edge sum     = {G.edge_sum()}")
print(f"edge product = {G.edge_product()}")

print()
print("=" * 72)
print("Exact part-size optimization")
print("=" * 72)
for n in range(4, 9):
    s_opt = C.max_edge_sum(params, n)
    p_opt = C.max_edge_product(params, n)
    print(
        f"n={n}: max sum {s_opt.value:>4} at {s_opt.argmax} "
        f"(all: {s_opt.all_argmax})   max product {p_opt.value:>8} at {p_opt.argmax}"
    )

print()
print("=" * 72)
print("The optimal light-part size tracks a closed-form fraction of n")
print("=" * 72)
x = F.light_part_fraction(params)
print(f"fraction x = {x.digits(12)}  (transcendental-looking, and conjecturally so)")
for n in (20, 50, 100, 200):
    v0 = C.max_edge_product(params, n).argmax[0]
    print(f"  n={n:>3}: optimal light part {v0:>3}, x*n = {float(x) * n:7.2f}")

print()
print("=" * 72)
print("Geometric-mean densities approach the limit constant from above")
print("=" * 72)
limit = F.construction_density_limit(params)
print(f"limit = {limit.digits(15)}")
for n in (10, 30, 100, 200):
    val = C.max_edge_product(params, n).value
    print(f"  n={n:>3}: density {F.density(val, math.comb(n, 2))}")

print()
print("=" * 72)
print("Nested construction: the light part recursively replaced")
print("=" * 72)
spec = C.IteratedSpec(3, ((2, 1), (2, 1)))
H = C.iterated_multigraph(spec, [(4, 5), (2, 2)])
print(f"levels (r,d) = {spec.levels} starting at a = {spec.a}")
print(f"terminal constant weight inside the innermost part: {spec.terminal_weight}")
q, best = H.max_subset_sum(4)
print(f"n = {H.n}, worst 4-set supports {q} edges (at {best});")
print(f"the member is a ({4},{q})-graph with product {H.edge_product()}")
