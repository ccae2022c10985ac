"""Box counting from first principles.

A set of dimension s occupies about eps**-s cells of a side-eps grid, so the
slope of log2 n(eps) against log2(1/eps) estimates s. This script walks the
machinery on shapes where the answer is obvious: a single point, a filled
segment, and a filled square.
"""

import numpy as np

from dimest import (
    PointCloud,
    ScaleSchedule,
    count_series,
    loglog_fit,
    uniform_segment,
    uniform_square,
)

schedule = ScaleSchedule.dyadic(3, 8)

shapes = {
    "point": PointCloud(np.array([[0.37, 0.81]])),
    "segment": uniform_segment(100_000),
    "square": uniform_square(2**18),
}

print("counts n(eps) on dyadic grids anchored at the bounding-box minimum\n")
header = "shape    " + "".join(f"  k={int(k)}" for k in schedule.ks)
print(header)
for name, cloud in shapes.items():
    series = count_series(cloud, schedule)
    row = "".join(f"{c:6d}" for c in series.counts)
    print(f"{name:8s} {row}")

print("\nleast-squares slope of log2 n vs log2(1/eps):")
for name, cloud in shapes.items():
    series = count_series(cloud, schedule)
    if np.all(series.counts == 1):
        print(f"  {name:8s} all counts are 1, slope 0 (a point has dimension 0)")
        continue
    fit = loglog_fit(series.ks, np.log2(series.counts))
    print(f"  {name:8s} dim ~ {fit.slope:.4f}   (r^2 = {fit.r_squared:.6f})")

print(
    "\nCells are half-open [i*eps, (i+1)*eps), so the endpoint x = 1.0 of the"
    "\nsegment owns one extra cell: counts are 2**k + 1, and the fitted slope"
    "\nsits just under 1 until k is large enough for the +1 not to matter."
)
