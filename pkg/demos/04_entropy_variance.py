"""
Entropy variance under multiples and powers
===========================================

Var[ln f(X)] changes under Y = aX^b through V[ln X] and one cross-moment,
E[ln f(X) · ln X]. The multiplier never enters.
"""

import math

from logentropy import families
from logentropy.entropy_variance import cross_moments_closed_form_exponential, hv_after_transform
from logentropy.oracle import mc_hv

cm = cross_moments_closed_form_exponential()
base = families.exponential()
for a, b in [(1, 0.5), (1, 2), (10, 2), (1, 3)]:
    fam = families.power_transform(base, a, b)
    est = mc_hv(fam.log_pdf, fam.sampler, 500_000, seed=4)
    print(f"Y = {a}·X^{b}: law {hv_after_transform(cm, b):.5f}  MC {est.value:.5f} ± {est.std_error:.5f}")
print(f"X² exact value 3 + π²/6 = {3 + math.pi**2 / 6:.6f}")
