"""
Growth of the right-angled pentagon group and the covolume series
sum_w q^-l(w) of the chamber stabilizers.

The geometric guess r(r-2)^(n-1) for the number of words of length n is
only an upper bound: length n elements obey d_n = (r-2) d_(n-1) - d_(n-2).
The exact series converges as soon as q exceeds the growth rate, which for
integer q means q >= r-2; the majorant needs q >= r-1.
"""

from twinlab.coxeter import (growth_series, growth_bound, growth_rate, covolume,
                             covolume_bound, covolume_partial)

for r in (5, 6, 7):
    d = growth_series(r, 8, check=True)
    print("r=%d  growth rate %.4f" % (r, growth_rate(r)))
    print("   exact    ", d)
    print("   majorant ", growth_bound(r, 8))

print("\n r  q   exact covolume   majorant   partial sum to n=30")
for r in (5, 6):
    for q in range(r - 3, r + 2):
        if q < 2:
            continue
        v = covolume(r, q)
        p = float(covolume_partial(r, q, 30))
        print("%2d %2d   %-14s %-10s %.6f" % (r, q, v, covolume_bound(r, q), p))
