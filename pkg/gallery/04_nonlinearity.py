"""
The finite core of the non-linearity argument for Fuchsian twin root data
over GF(2) and GF(3).

V_i is generated by root groups on a chain of roots translated along a wall;
it is abelian of exponent 2.  V_j does the same with exponent 3.  Roots from
the two chains never form prenilpotent pairs, so V_i and V_j generate their
free product inside U+, and vv' has infinite order although v^2 = v'^3 = 1.
We check the free product up to a bounded length and watch (vv')^n grow.
"""

from twinlab.gfield import field_new
from twinlab.fuchsian import FuchsianConfig, FuchsianUWord
from twinlab.nonlin import NonlinWitness, check_vi, certify_free_product, certify_infinite_order

F2, F3 = field_new(2), field_new(3)
cfg = FuchsianConfig(5, [F2, F3, F2, F3, F2])
w = NonlinWitness(cfg, N=1, L=6)
print("panel types", (w.i, w.j))
print("roots a_i(n):", w.roots_i)
print("roots a_j(n):", w.roots_j)
print("invariants:", w.invariants())
print("V_i on depth 3:", check_vi(cfg, w.i, 3))
print("V_j on depth 3:", check_vi(cfg, w.j, 3))

fp = certify_free_product(w)
print("\nalternating words up to length %d: %d, collisions %d"
      % (fp["free_product_checked_to"], fp["words"], fp["collision_count"]))

a, b = w.roots_i[0], w.roots_j[0]
v = FuchsianUWord.letter(a, F2.one)
vp = FuchsianUWord.letter(b, F3.one)
io = certify_infinite_order(w, v, vp, 20)
print("syllable lengths of (vv')^n:", io["order_growth"])
print(io["header"])
