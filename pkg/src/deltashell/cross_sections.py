"""Exact s-wave cross section and its pole approximants.

sigma(E) = (pi/k^2) |S(E) - 1|^2 is compared against

* the Laurent (Breit-Wigner) form, which keeps only the pole term of the
  S-matrix and needs the energy-plane residue;
* the e-unitarized form from S ~ (E - conj(z_R))/(E - z_R);
* the k-unitarized form from S ~ (k - conj(k_R))/(k - k_R), a wave-number
  Breit-Wigner;
* the two-pole form, which keeps two pole terms of the Mittag-Leffler
  expansion and adds their interference.

The e- and k-unitarized forms differ by the exact algebraic ratio
4 alpha^2 / ((k + alpha)^2 + beta^2), close to one near a sharp peak.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInput
from .poles import find_resonance
from .potential import PotentialSpec, Pole, PoleKind
from .scattering import s_matrix, zeldovich_norm

__all__ = [
    "CrossSectionBundle",
    "cross_section_exact",
    "cross_section_laurent",
    "cross_section_e_unitarized",
    "cross_section_k_unitarized",
    "unitarized_ratio",
    "cross_section_two_pole",
    "cross_section_bundle",
]


@dataclass(frozen=True)
class CrossSectionBundle:
    """Sampled exact cross section plus approximant columns."""

    grid: np.ndarray
    exact: np.ndarray
    laurent: np.ndarray
    e_unitarized: np.ndarray
    k_unitarized: np.ndarray
    two_pole: np.ndarray | None = None


def _energies(e):
    e = np.asarray(e, dtype=float)
    if np.any(e <= 0):
        raise InvalidInput("scattering energy must be positive")
    return e


def _require_resonance(*poles: Pole) -> None:
    for pole in poles:
        if pole.kind is not PoleKind.RESONANCE:
            raise InvalidInput("cross-section approximants need resonance poles")


def cross_section_exact(spec: PotentialSpec, e):
    """(pi/k^2) |S - 1|^2 at real energy E = k^2 (vectorized)."""
    e = _energies(e)
    s = s_matrix(spec, np.sqrt(e).astype(complex))
    out = np.pi / e * np.abs(s - 1.0) ** 2
    return float(out) if out.ndim == 0 else out


def cross_section_laurent(spec: PotentialSpec, pole: Pole, e):
    """Breit-Wigner form (pi/k^2) |r_R|^2 / ((E-E_R)^2 + (Gamma_R/2)^2)."""
    _require_resonance(pole)
    e = _energies(e)
    r_e = abs(zeldovich_norm(spec, pole).residue_E)
    out = np.pi / e * r_e**2 / ((e - pole.e_R) ** 2 + (0.5 * pole.gamma_R) ** 2)
    return float(out) if out.ndim == 0 else out


def cross_section_e_unitarized(spec: PotentialSpec, pole: Pole, e):
    """(pi/k^2) Gamma_R^2 / ((E-E_R)^2 + (Gamma_R/2)^2); peak value 4 pi / E_R."""
    _require_resonance(pole)
    e = _energies(e)
    out = np.pi / e * pole.gamma_R**2 / ((e - pole.e_R) ** 2 + (0.5 * pole.gamma_R) ** 2)
    return float(out) if out.ndim == 0 else out


def cross_section_k_unitarized(spec: PotentialSpec, pole: Pole, e):
    """(pi/k^2) (2 beta_R)^2 / ((k-alpha_R)^2 + beta_R^2), k = sqrt(E)."""
    _require_resonance(pole)
    e = _energies(e)
    k = np.sqrt(e)
    out = np.pi / e * (2.0 * pole.beta_R) ** 2 / ((k - pole.alpha_R) ** 2 + pole.beta_R**2)
    return float(out) if out.ndim == 0 else out


def unitarized_ratio(spec: PotentialSpec, pole: Pole, e):
    """Ratio e-unitarized / k-unitarized: 4 alpha^2 / ((k+alpha)^2 + beta^2).

    The closed form is verified pointwise against the explicit quotient to
    1e-12 relative; a failure would mean the pole record is inconsistent.
    """
    _require_resonance(pole)
    e = _energies(e)
    k = np.sqrt(e)
    alpha, beta = pole.alpha_R, pole.beta_R
    ratio = 4.0 * alpha**2 / ((k + alpha) ** 2 + beta**2)
    quotient = cross_section_e_unitarized(spec, pole, e) / cross_section_k_unitarized(
        spec, pole, e
    )
    if np.any(np.abs(ratio - quotient) > 1e-12 * np.abs(ratio)):
        raise ArithmeticError("unitarized-ratio identity violated; inconsistent pole")
    return float(ratio) if np.ndim(ratio) == 0 else ratio


def cross_section_two_pole(spec: PotentialSpec, pole1: Pole, pole2: Pole, e):
    """Two-pole cross section: two Lorentzians plus their interference.

    (pi/k^2) [ |r1|^2/D1 + |r2|^2/D2
               + 2 Re( r1 conj(r2) / ((E-z1)(E-conj(z2))) ) ]
    with energy-plane residues r_i.
    """
    _require_resonance(pole1, pole2)
    e = _energies(e)
    r1 = zeldovich_norm(spec, pole1).residue_E
    r2 = zeldovich_norm(spec, pole2).residue_E
    d1 = (e - pole1.e_R) ** 2 + (0.5 * pole1.gamma_R) ** 2
    d2 = (e - pole2.e_R) ** 2 + (0.5 * pole2.gamma_R) ** 2
    cross = 2.0 * np.real(r1 * np.conj(r2) / ((e - pole1.z) * (e - np.conj(pole2.z))))
    out = np.pi / e * (abs(r1) ** 2 / d1 + abs(r2) ** 2 / d2 + cross)
    return float(out) if out.ndim == 0 else out


def cross_section_bundle(
    spec: PotentialSpec,
    index: int,
    e_min: float | None = None,
    e_max: float | None = None,
    points: int = 2001,
    second_index: int | None = None,
) -> CrossSectionBundle:
    """Sampled bundle around resonance ``index``.

    The default window is E_R +/- 10 Gamma_R clipped to positive energies,
    which resolves sharp peaks; pass e_min/e_max to override.
    """
    if points < 2:
        raise InvalidInput("need at least two grid points")
    pole = find_resonance(spec, index)
    if e_min is None:
        e_min = max(pole.e_R - 10.0 * pole.gamma_R, 1e-6 * abs(pole.e_R))
    if e_max is None:
        e_max = pole.e_R + 10.0 * pole.gamma_R
    if not (0.0 < e_min < e_max):
        raise InvalidInput("need 0 < e_min < e_max")
    grid = np.linspace(e_min, e_max, points)
    two_pole = None
    if second_index is not None:
        second = find_resonance(spec, second_index)
        two_pole = cross_section_two_pole(spec, pole, second, grid)
    return CrossSectionBundle(
        grid=grid,
        exact=cross_section_exact(spec, grid),
        laurent=cross_section_laurent(spec, pole, grid),
        e_unitarized=cross_section_e_unitarized(spec, pole, grid),
        k_unitarized=cross_section_k_unitarized(spec, pole, grid),
        two_pole=two_pole,
    )
