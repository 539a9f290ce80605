"""Potential description and S-matrix pole records.

The shell potential ``V(r) = g * delta(r - a)`` is fully characterized by
the dimensionless strength ``lambda = 2 m g a / hbar^2`` and the radius
``a``. All internal computations run in reduced units (``hbar^2/2m = 1``,
energies ``E = k^2``); the ``physical`` unit system only rescales energies
by ``hbar^2 / 2m`` at the reporting boundary.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import InvalidInput

__all__ = ["PotentialSpec", "Pole", "PoleKind"]


class PoleKind(str, enum.Enum):
    RESONANCE = "resonance"
    ANTI_RESONANCE = "anti_resonance"
    BOUND = "bound"
    VIRTUAL_STATE = "virtual_state"


@dataclass(frozen=True)
class PotentialSpec:
    """Shell strength, radius and unit conventions.

    Attributes
    ----------
    lam : float
        Dimensionless strength; must be nonzero. Positive for a barrier,
        negative for a well.
    a : float
        Shell radius, > 0. Wave numbers are reported in units of 1/a.
    unit_system : str
        "reduced" (default): hbar^2/2m = 1, so E = k^2.
        "physical": energies are rescaled by hbar^2/2m for reporting.
    mass, hbar : float
        Only consulted in physical mode.
    """

    lam: float
    a: float = 1.0
    unit_system: str = "reduced"
    mass: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        if not math.isfinite(self.lam) or self.lam == 0.0:
            raise InvalidInput("potential strength must be finite and nonzero")
        if abs(self.lam) > 700.0:
            raise InvalidInput("strength magnitude beyond 700 overflows lambda*exp(lambda)")
        if not (self.a > 0.0 and math.isfinite(self.a)):
            raise InvalidInput("shell radius must be positive and finite")
        if self.unit_system not in ("reduced", "physical"):
            raise InvalidInput(f"unknown unit system {self.unit_system!r}")
        if self.unit_system == "physical" and not (self.mass > 0.0 and self.hbar > 0.0):
            raise InvalidInput("physical units need positive mass and hbar")

    @property
    def energy_scale(self) -> float:
        """Factor converting reduced energies (k^2) to reported energies."""
        if self.unit_system == "reduced":
            return 1.0
        return self.hbar**2 / (2.0 * self.mass)

    @property
    def coupling(self) -> float:
        """Shell coupling g in reduced units: g = lam / a."""
        return self.lam / self.a


@dataclass(frozen=True)
class Pole:
    """One S-matrix pole in the complex wave-number plane.

    ``z = k**2`` holds to round-off (reduced units). ``gamma_R = -2 Im z``
    is the pole width: positive for resonances, exactly zero for bound and
    virtual poles, and negative for anti-resonances (the mirror pole).
    """

    kind: PoleKind
    branch: int
    index: int
    k: complex
    z: complex

    @property
    def e_R(self) -> float:
        return self.z.real

    @property
    def gamma_R(self) -> float:
        return -2.0 * self.z.imag + 0.0  # normalize -0.0 for zero-width poles

    @property
    def alpha_R(self) -> float:
        return self.k.real

    @property
    def beta_R(self) -> float:
        return -self.k.imag

    def __post_init__(self):
        if self.kind in (PoleKind.BOUND, PoleKind.VIRTUAL_STATE):
            if self.k.real != 0.0 or self.z.imag != 0.0:
                raise InvalidInput(f"{self.kind.value} pole must sit on the imaginary k-axis")
        elif self.kind is PoleKind.RESONANCE:
            if not (self.k.real > 0.0 and self.k.imag < 0.0):
                raise InvalidInput("resonance pole must lie in the fourth quadrant")
        elif self.kind is PoleKind.ANTI_RESONANCE:
            if not (self.k.real < 0.0 and self.k.imag < 0.0):
                raise InvalidInput("anti-resonance pole must lie in the third quadrant")
