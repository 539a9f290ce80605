"""Enumerate and classify the S-matrix poles of the shell potential.

Poles are the zeros of the incoming Jost function, i.e. the complex roots
of ``2 i k a + lam * (exp(2 i k a) - 1) = 0``. With ``t = lam - 2 i a k``
this becomes ``t exp(t) = lam exp(lam)``, so every pole is

    k = (lam - W_n(lam * exp(lam))) / (2 i a)

for some branch n of the Lambert W function. Branch bookkeeping:

* resonances (fourth quadrant): branches -1, -2, ... for lam > 0; for
  lam < 0 branch -1 is taken by the virtual state (or by the trivial
  self-root ``W(lam e^lam) = lam`` when lam < -1), so resonances start at
  branch -2. User-facing index n = 1 is always the lowest resonance.
* anti-resonances (third quadrant): branch +n for every lam. For a
  negative real argument the conjugation identity picks up a unit branch
  offset across the cut, conj(W_{-m}) = W_{m-1}, which is exactly what
  keeps k_{-n} = -conj(k_n) paired with the resonance above.
* bound state (lam < -1): branch 0.  virtual state (-1 < lam < 0): branch -1.

Each Lambert-W root is polished with one or two Newton steps on the
transcendental equation itself, which drives the equation residual to the
evaluation noise floor (~1e-13 for |lam| = 100).
"""

from __future__ import annotations

import cmath
import math

from .errors import InvalidInput, NonConvergence, NoSuchPole
from .lambertw import lambert_w
from .potential import PotentialSpec, Pole, PoleKind

__all__ = [
    "find_resonance",
    "find_anti_resonance",
    "find_bound_state",
    "find_virtual_state",
    "enumerate_poles",
    "transcendental_residual",
]

_RESIDUAL_TOL = 1e-12
_DEGENERACY_BAND = 1e-10  # |lam + 1| below this: branch-point collision at k = 0


def transcendental_residual(spec: PotentialSpec, k: complex) -> float:
    """|2ika + lam (exp(2ika) - 1)|, the pole-equation residual at k."""
    x = 2j * k * spec.a
    return abs(x + spec.lam * (cmath.exp(x) - 1.0))


def _polish_complex(spec: PotentialSpec, k: complex, steps: int = 2) -> complex:
    # Newton on f(k) = 2ika + lam(e^{2ika} - 1); recovers the precision lost
    # to cancellation in lam - W when |lam| is large.
    lam, a = spec.lam, spec.a
    for _ in range(steps):
        x = 2j * k * a
        f = x + lam * (cmath.exp(x) - 1.0)
        fp = 2j * a * (1.0 + lam * cmath.exp(x))
        if fp == 0:
            break
        k = k - f / fp
    return k

def _polish_imaginary(spec: PotentialSpec, y: float, steps: int = 3) -> float:
    # Same Newton step restricted to k = i y, so bound/virtual poles stay
    # exactly on the imaginary axis.
    lam, a = spec.lam, spec.a
    for _ in range(steps):
        f = -2.0 * y * a + lam * math.expm1(-2.0 * y * a)
        fp = -2.0 * a * (1.0 + lam * math.exp(-2.0 * y * a))
        if fp == 0:
            break
        y = y - f / fp
    return y


def _w_argument(spec: PotentialSpec) -> float:
    return spec.lam * math.exp(spec.lam)


def _checked(spec: PotentialSpec, pole: Pole) -> Pole:
    resid = transcendental_residual(spec, pole.k)
    if resid > _RESIDUAL_TOL:
        raise NonConvergence(
            f"pole {pole.kind.value} n={pole.index} residual {resid:.3e} exceeds {_RESIDUAL_TOL}"
        )
    return pole


def find_resonance(spec: PotentialSpec, n: int) -> Pole:
    """Return the n-th resonance (n = 1 is the lowest, ordered by Re k).

    Uses branch -n of W for positive strength and branch -(n+1) for
    negative strength, so the caller's indexing is uniform in sign.
    """
    if n < 1:
        raise InvalidInput("resonance index must be a positive integer")
    m = n if spec.lam > 0 else n + 1
    w = lambert_w(-m, _w_argument(spec))
    k = _polish_complex(spec, (spec.lam - w) / (2j * spec.a))
    if not (k.real > 0 and k.imag < 0):
        raise NonConvergence(f"branch {-m} root {k} is not in the fourth quadrant")
    return _checked(spec, Pole(PoleKind.RESONANCE, -m, n, k, k * k))


def find_anti_resonance(spec: PotentialSpec, n: int) -> Pole:
    """Return the n-th anti-resonance, the mirror -conj(k_n) of resonance n."""
    if n < 1:
        raise InvalidInput("anti-resonance index must be a positive integer")
    w = lambert_w(n, _w_argument(spec))
    k = _polish_complex(spec, (spec.lam - w) / (2j * spec.a))
    if not (k.real < 0 and k.imag < 0):
        raise NonConvergence(f"branch {n} root {k} is not in the third quadrant")
    return _checked(spec, Pole(PoleKind.ANTI_RESONANCE, n, n, k, k * k))


def find_bound_state(spec: PotentialSpec) -> Pole:
    """Return the bound-state pole (exists only for lam < -1)."""
    if not spec.lam < -1.0 or abs(spec.lam + 1.0) < _DEGENERACY_BAND:
        raise NoSuchPole(f"no bound state for strength {spec.lam}")
    w = lambert_w(0, _w_argument(spec))
    y = _polish_imaginary(spec, -(spec.lam - w.real) / (2.0 * spec.a))
    if not y > 0:
        raise NonConvergence("bound-state root left the positive imaginary axis")
    k = complex(0.0, y)
    return _checked(spec, Pole(PoleKind.BOUND, 0, 0, k, complex(-y * y, 0.0)))


def find_virtual_state(spec: PotentialSpec) -> Pole:
    """Return the virtual (anti-bound) pole (exists only for -1 < lam < 0)."""
    if not (-1.0 < spec.lam < 0.0) or abs(spec.lam + 1.0) < _DEGENERACY_BAND:
        raise NoSuchPole(f"no virtual state for strength {spec.lam}")
    w = lambert_w(-1, _w_argument(spec))
    y = _polish_imaginary(spec, -(spec.lam - w.real) / (2.0 * spec.a))
    if not y < 0:
        raise NonConvergence("virtual-state root left the negative imaginary axis")
    k = complex(0.0, y)
    return _checked(spec, Pole(PoleKind.VIRTUAL_STATE, -1, 0, k, complex(-y * y, 0.0)))


def enumerate_poles(spec: PotentialSpec, count: int) -> list[Pole]:
    """Bound or virtual pole (when present) followed by resonances 1..count."""
    if count < 1:
        raise InvalidInput("count must be a positive integer")
    poles: list[Pole] = []
    if spec.lam < -1.0 and abs(spec.lam + 1.0) >= _DEGENERACY_BAND:
        poles.append(find_bound_state(spec))
    elif -1.0 < spec.lam < 0.0 and abs(spec.lam + 1.0) >= _DEGENERACY_BAND:
        poles.append(find_virtual_state(spec))
    poles.extend(find_resonance(spec, n) for n in range(1, count + 1))
    return poles
