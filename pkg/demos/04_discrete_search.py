"""
Discrete channels by exhaustive search
======================================

Build a noiseless binary two-way relay channel, evaluate the partial-DF
pentagon at the uniform input, then search over quantized input laws.
"""

import numpy as np

from twrc.discrete import (
    DmTwrc,
    InputDistribution,
    enumeration_size,
    exhaustive_search,
    format_channel,
    theorem1_bounds,
    theorem1_region,
)

# each receiver sees the other two inputs as a pair of bits
noiseless = DmTwrc.from_function((2, 2, 2, 4, 4, 4), lambda x1, x2, xr: (2 * x2 + xr, 2 * x1 + xr, 2 * x1 + x2))

half = np.array([0.5, 0.5])
dist = InputDistribution.identity_aux(half, half, half)
print(theorem1_bounds(noiseless, dist))
print("uniform, U = X:", theorem1_region(noiseless, dist).to_dict())

region = exhaustive_search(noiseless, quantization=0.5)
print("quantization 1/2: %d distinct pentagons, contains (1, 1): %s" % (len(region), region.contains((1, 1))))
print("quantization 1/4 would enumerate", enumeration_size(noiseless, 4, 2), "input laws")

# a harder variant: the direct user-to-user bit passes through a BSC and
# the relay only observes x1 xor x2
eps = 0.1
law = np.zeros((2, 2, 2, 4, 4, 2))
for x1 in range(2):
    for x2 in range(2):
        for xr in range(2):
            for f1 in range(2):
                for f2 in range(2):
                    p = (eps if f1 else 1 - eps) * (eps if f2 else 1 - eps)
                    law[x1, x2, xr, 2 * (x2 ^ f1) + xr, 2 * (x1 ^ f2) + xr, x1 ^ x2] += p
noisy = DmTwrc(law)
b = exhaustive_search(noisy, 0.5).compute_boundary(11)
for x, h in zip(b.grid, b.heights):
    print("R1=%.3f  R2<=%.3f" % (x, h))

# the same channel as a file the CLI understands: twrc dm --channel-file noisy.txt
print(format_channel(noisy).splitlines()[0], "...")
