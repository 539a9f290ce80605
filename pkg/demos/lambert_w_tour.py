#!/usr/bin/env python3
"""A quick tour of the multi-branch Lambert W kernel.

W_n(z) solves w e^w = z on branch n. The pole solver consumes it at the
single argument lam * exp(lam), but the implementation covers the whole
complex plane; this script probes the branch stack, the real segments,
and the square-root behavior at the branch point z = -1/e where the two
real branches meet.
"""

import numpy as np

from deltashell import lambert_w, lambert_w_residual

z = 0.3 + 1.7j
print(f"branch stack at z = {z}")
for n in range(-3, 4):
    w = lambert_w(n, z)
    print(f"  n={n:+d}: w = {w:+.6f}   |w e^w - z| = {lambert_w_residual(w, z):.1e}")

print("\nreal segments:")
for x in (-0.36, -0.05, 0.5, 3.0):
    print(f"  W_0({x:+.2f}) = {lambert_w(0, x).real:+.6f}", end="")
    if x < 0:
        print(f"   W_-1({x:+.2f}) = {lambert_w(-1, x).real:+.6f}")
    else:
        print()

print("\nsquare-root collision at the branch point -1/e:")
e = np.e
for eps in (1e-2, 1e-4, 1e-6, 1e-8):
    z = -1.0 / e + eps
    w0 = lambert_w(0, z).real
    wm = lambert_w(-1, z).real
    # both branches sit at -1 +/- sqrt(2 e eps) to leading order
    print(f"  eps={eps:7.0e}:  W_0 = {w0:+.8f}  W_-1 = {wm:+.8f}  "
          f"predicted split {2 * np.sqrt(2 * e * eps):.2e}  actual {w0 - wm:.2e}")

print("\nresidual sweep over a log-spaced grid, branches -5..5")
rng = np.random.default_rng(0)
worst = 0.0
for _ in range(5000):
    zz = 10 ** rng.uniform(-6, 6) * np.exp(1j * rng.uniform(-np.pi, np.pi))
    n = int(rng.integers(-5, 6))
    worst = max(worst, lambert_w_residual(lambert_w(n, zz), zz) / max(1.0, abs(zz)))
print(f"worst relative residual: {worst:.2e}")
