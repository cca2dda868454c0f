"""
Partial decode-forward beats time sharing
=========================================

With a noisy link into the relay, letting the relay decode only part of each
message reaches rates that no mix of plain DF and direct transmission can.
"""

import numpy as np

from twrc import (
    GaussianTwrc,
    SplitParams,
    convex_hull,
    decode_forward,
    direct_transmission,
    hull_height,
    partial_decode_forward,
    pdf_improvement_condition,
)

# user 1 hears user 2 well (N1 = 2), user 2 hears user 1 badly (N2 = 30)
ch = GaussianTwrc(p1=20, p2=20, pr=20, n1=2, n2=30, nr=6)

df = decode_forward(ch)
dt = direct_transmission(ch)
print("decode-forward      ", df.to_dict())
print("direct transmission ", dt.to_dict())

# user 1 sends everything through the relay, user 2 only half of its power
pdf = partial_decode_forward(ch, SplitParams(alpha=1.0, beta=0.5))
corner = (pdf.r1_max, min(pdf.r2_max, pdf.sum_max - pdf.r1_max))
print("partial DF (1, 0.5) ", pdf.to_dict())
print("corner point         (%.3f, %.3f)" % corner)

# time sharing between DF and direct transmission
hull = convex_hull(df.corners() + dt.corners())
best = hull_height(hull, corner[0])
print("time sharing reaches R2 = %.3f at R1 = %.3f" % (best, corner[0]))
print("partial DF is ahead by %.3f bits" % (corner[1] - best))

print("improvement condition holds:", pdf_improvement_condition(ch))
print("...and for a symmetric channel:", pdf_improvement_condition(GaussianTwrc(20, 20, 20, 12, 12, 6)))

# a quick look at how the corner moves with beta
for beta in np.linspace(0, 1, 6):
    cs = partial_decode_forward(ch, SplitParams(1.0, beta))
    print("beta=%.1f  r1=%.3f  r2=%.3f  sum=%.3f" % (beta, cs.r1_max, cs.r2_max, cs.sum_max))
