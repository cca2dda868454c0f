"""
Mixing decode-forward and compute-forward
=========================================

The relay decodes part of each message (alpha, beta) and a lattice sum of
the rest; gamma splits the relay's power between the two. Scanning gamma
shows where the quoted boundary points come from.
"""

import numpy as np

from twrc import GaussianTwrc, SplitParams, best_gamma, combined_df_cf, compute_forward, i_values

asym = GaussianTwrc(50, 40, 20, 20, 40, 15)
sym = GaussianTwrc(20, 20, 20, 8, 8, 6)

print("pure compute-forward:", compute_forward(asym).to_dict())

for gamma in np.linspace(0, 0.2, 5):
    cs = combined_df_cf(asym, SplitParams(0.5, 0.0, gamma))
    print("gamma=%.2f  r1=%.4f  r2=%.4f" % (gamma, cs.r1_max, cs.r2_max))

gamma, cs = best_gamma(asym, 0.5, 0.0)
print("best gamma for the asymmetric channel: %.2f -> (%.3f, %.3f)" % (gamma, cs.r1_max, cs.r2_max))

gamma, cs = best_gamma(sym, 0.48, 0.0)
print("best gamma for the symmetric channel:  %.2f -> (%.3f, %.3f)" % (gamma, cs.r1_max, cs.r2_max))

# the nine mutual-information terms behind that pentagon
for k, v in i_values(sym, SplitParams(0.48, 0.0, gamma)).to_dict().items():
    print(f"  {k} = {v:.4f}")
