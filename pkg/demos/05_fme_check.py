"""
Checking the eliminated regions
===============================

The closed-form pentagons come from projecting out the split rates. Here the
projected pentagon is compared, point by point, with direct feasibility of
the unprojected inequality system.
"""

import numpy as np

from twrc import GaussianTwrc, SplitParams, contains, i_values
from twrc.oracle import theorem2_raw_feasible

rng = np.random.default_rng(0)
ch = GaussianTwrc(20, 20, 20, 8, 8, 6)
iv = i_values(ch, SplitParams(0.48, 0.0, 0.03))
pent = iv.pentagon()
print("pentagon:", pent.to_dict())

pts = rng.uniform(0, 1.5, (20000, 2))
raw = np.array([theorem2_raw_feasible(iv, p) for p in pts])
closed = np.array([contains(pent, p) for p in pts])
print("feasible points: %d of %d, disagreements: %d" % (raw.sum(), len(pts), (raw != closed).sum()))

# just outside each corner the raw system becomes infeasible
for corner in pent.corners():
    bumped = (corner[0] + 1e-6, corner[1] + 1e-6)
    print(corner, theorem2_raw_feasible(iv, corner), theorem2_raw_feasible(iv, bumped))
