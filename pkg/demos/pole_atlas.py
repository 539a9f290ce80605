#!/usr/bin/env python3
"""Tour of the S-matrix pole landscape across shell strengths.

Every pole of the shell potential is a Lambert W value in disguise:
resonances in the fourth quadrant of the k-plane, their mirror
anti-resonances in the third, a bound state on the positive imaginary
axis once the well is deep enough (strength below -1), and a virtual
state on the negative imaginary axis for shallow wells. This script
walks all of them and checks each one against the transcendental pole
equation the Lambert form solves.
"""

import numpy as np

from deltashell import (
    PotentialSpec,
    enumerate_poles,
    find_anti_resonance,
    transcendental_residual,
)

for lam in (100.0, 10.0, 0.5, -0.5, -10.0, -100.0):
    spec = PotentialSpec(lam=lam)
    print(f"\nstrength {lam:+g}")
    print(f"  {'kind':<14} {'n':>2} {'branch':>6} {'k':>24} {'E = k^2':>26} {'residual':>10}")
    for pole in enumerate_poles(spec, 4):
        resid = transcendental_residual(spec, pole.k)
        print(
            f"  {pole.kind.value:<14} {pole.index:>2} {pole.branch:>6} "
            f"{pole.k:>24.5f} {pole.z:>26.5f} {resid:>10.1e}"
        )
    anti = find_anti_resonance(spec, 1)
    print(f"  {anti.kind.value:<14} {anti.index:>2} {anti.branch:>6} {anti.k:>24.5f}")

# as the barrier grows, resonances sink toward the real axis and line up
# on the sin^2 lattice k = n pi
print("\nfirst-resonance trajectory with increasing barrier strength")
for lam in (2.0, 5.0, 20.0, 50.0, 200.0, 500.0):
    k = enumerate_poles(PotentialSpec(lam=lam), 1)[-1].k
    print(f"  strength {lam:>6g}: k = {k:.6f}   |k - pi| = {abs(k - np.pi):.4f}")
