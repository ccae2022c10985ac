"""Estimators against fractals whose dimension is known in closed form.

Middle-thirds Cantor dust has dimension log 2 / log 3 = 0.6309... and the
Sierpinski triangle log2(3) = 1.5850...; both are generated here and pushed
through the same counting pipeline as any measured point set.

The Cantor cloud is built on an integer lattice (endpoints scaled by 3**12)
so that ternary box boundaries are exact doubles: the occupied counts are
then exactly 2**k at side 3**(12-k), and the fitted slope is the closed-form
dimension to machine precision. Dimension estimates are scale invariant, so
the lattice copy answers for the unit-interval set.
"""

import math

import numpy as np

from dimest import (
    ScaleSchedule,
    cantor_points,
    count_series,
    ifs_chaos_game,
    loglog_fit,
    sierpinski_spec,
)

LEVEL = 12
cantor = cantor_points(LEVEL, scale=3**LEVEL)
schedule = ScaleSchedule.from_epsilons([float(3 ** (LEVEL - k)) for k in range(1, 9)])
series = count_series(cantor, schedule, anchor=np.zeros(1))

print("Cantor dust, level 12 (4096 left endpoints on the 3**12 lattice)")
print(" k   side 3**(12-k)   n     expected 2**k")
for k, (_, eps, count) in enumerate(series.entries, start=1):
    print(f"{k:2d}   {int(eps):14d}   {count:5d}   {2**k:5d}")
fit = loglog_fit(series.ks, np.log2(series.counts))
print(f"fitted dimension: {fit.slope:.12f}")
print(f"log 2 / log 3   : {math.log(2) / math.log(3):.12f}\n")

print("Sierpinski triangle via the chaos game (10**6 points, seeded stream)")
cloud = ifs_chaos_game(sierpinski_spec(1_000_000, rng_seed=0))
sier = count_series(cloud, ScaleSchedule.dyadic(2, 7))
print(" k   n(eps)   ~3**k ideal")
for k, _, count in sier.entries:
    print(f"{int(k):2d}   {count:6d}   {3**int(k):6d}")
sfit = loglog_fit(sier.ks, np.log2(sier.counts))
print(f"fitted dimension: {sfit.slope:.4f}")
print(f"log2(3)         : {math.log2(3.0):.4f}")
print(
    "\nDyadic cells never align with the triangle rows (its height is"
    "\nirrational), so counts run ~1.5x above 3**k; the surplus is nearly"
    "\nconstant across scales and cancels out of the slope."
)
