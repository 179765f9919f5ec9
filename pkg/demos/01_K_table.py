"""
The K constant of the generalized gamma family
==============================================

For every GG(a, b, ν) the entropy splits into a part that only sees the
log-variate and a constant that only sees ν::

    H = E[ln X] + ln(V[ln X]) / 2 + K(ν)

This script rebuilds the K(ν) table, shows the ν → 0 and ν → ∞ limits, and
checks that a and b really drop out.
"""

import math

from logentropy.gg import GGParams, gg_entropy, gg_K, gg_log_moments, table1_rows
from logentropy.transform import K_LOGNORMAL

# %%
# The table, with the +ν term written out as its own column.
print(f"{'nu':>7} {'-nu*psi':>12} {'lnGamma':>10} {'+nu':>7} {'-ln(psi1)/2':>12} {'K':>9} {'printed K':>10}")
for r in table1_rows():
    print(
        f"{r['nu']:7g} {r['neg_nu_digamma']:12.6f} {r['ln_gamma']:10.5f} {r['plus_nu']:7g} "
        f"{r['neg_half_ln_trigamma']:12.6f} {r['K']:9.6f} {r['paper_K']:10.5f}"
    )

# %%
# K climbs from 1 towards the lognormal value ½ln(2πe) as ν grows.
for nu in (1e-4, 1e-2, 1.0, 1e2, 1e4):
    print(f"K({nu:g}) = {gg_K(nu):.6f}")
print(f"lognormal limit = {K_LOGNORMAL:.6f}")

# %%
# Same ν, different multipliers and powers: the residual never moves.
for a, b in [(1, 1), (5, 0.3), (0.2, 4)]:
    p = GGParams(a, b, 2.0)
    m = gg_log_moments(p)
    print(f"a={a:<4} b={b:<4} H - E[ln X] - ln V/2 = {gg_entropy(p) - m.mean_log - math.log(m.var_log) / 2:.12f}")
