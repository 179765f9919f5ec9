"""
Code lengths of a rank distribution under prefix splitting
==========================================================

Ideal code lengths are -ln p. Prepending one of m equiprobable prefixes
adds ln m to every length: the mean (entropy) grows by ln m, the variance
(entropy variance) is untouched, and ranks spread out by roughly m.
"""

from logentropy.rank import from_probs, rank_dilation_report

d = from_probs([0.4, 0.2, 0.1, 0.3])
print("ranks of the input events:", d.ranks.tolist())
rep = rank_dilation_report(d, 4)
for key in ("entropy_before", "entropy_after", "delta_entropy", "predicted_delta_entropy",
            "hv_before", "hv_after", "delta_hv", "mean_rank_ratio"):
    print(f"{key:>24}: {rep[key]:.6f}")
