"""Closed forms: density limits, step thresholds, and integer conditions.

Run:  python demos/closed_forms_tour.py
"""

from fractions import Fraction

from sqgraphs import formulas as F
from sqgraphs.multigraph import Params

print("=" * 72)
print("Asymptotic density limits")
print("=" * 72)
for a, r in ((2, 2), (2, 3), (3, 2), (5, 4)):
    lim = F.product_density_limit(a, r)
    print(f"  a={a} r={r}: max geometric mean -> {lim.digits(20)}  (between {a} and {a+1})")

print()
print("The light-part fraction and its recurrence across part counts:")
for r in (2, 3, 4, 5):
    x = F.light_part_fraction(Params(2, r, 1))
    res = F.light_part_recurrence_residual(2, r, 1)
    print(f"  r={r}: x = {x.digits(15)}   recurrence residual at r->r+1: {res:.1e}")

print()
print("=" * 72)
print("Maximal average edge weight: the floor-sum step threshold")
print("=" * 72)
print("For (s, q) = (4, 15) the least rational m with")
print("  floor(1+m) + floor(1+2m) + floor(1+3m) > 15")
m = F.max_sum_density(4, 15)
print(f"is m = {m} (= 2 + 1/3)")
print()
print("Across the resolved family the threshold has a closed form:")
for a in (2, 3):
    for r in (2, 3):
        s = 2 * r
        from sqgraphs.constructions import max_edge_sum

        q = max_edge_sum(Params(a, r, 1), s).value
        got = F.max_sum_density(s, q)
        expect = a + Fraction(2 * r - 3, 2 * r - 1)
        print(f"  a={a} r={r}: threshold({s},{q}) = {got}  closed form {expect}  match={got == expect}")

print()
print("=" * 72)
print("Integer power conditions (evaluated exactly; floats never trusted)")
print("=" * 72)
print("Smallest replicated-part size passing the averaging inequalities:")
for a, d in ((2, 1), (200, 1), (5, 2), (10, 3)):
    print(f"  a={a:>3} d={d}: min part size = {F.min_part_size(a, d)}")
print()
print("At a=200 the deficiency-one inequality is razor thin:")
print(f"  200^3 = {200**3}  vs  201^2 * 199 = {201**2 * 199}")
print()
print("Cross-gain condition (a+1)^r (a-d) >= a^(r+1):")
for a, r, d in ((3, 2, 1), (3, 2, 2), (3, 6, 2)):
    print(f"  a={a} r={r} d={d}: {F.cross_gain_condition(a, r, d)}")

print()
print("=" * 72)
print("Conjectured flat-interval value just above the zero-deficiency bound")
print("=" * 72)
for a, r in ((2, 2), (2, 3), (4, 2)):
    print(f"  a={a} r={r}: {F.plateau_density(a, r).digits(20)}")
