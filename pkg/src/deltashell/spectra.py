"""Normalized decay-energy-spectrum lineshapes.

The spectrum of a single pole is the Lorentzian modulated by the squared
interaction matrix element and divided by the decay constant,

    dP/dE = (1/Gamma) M^2(E) / ((E - E_R)^2 + (Gamma_R/2)^2),

which integrates to one over (0, inf) by construction. It is not a
Breit-Wigner: the matrix element skews the peak, adds the sin^2 zero
lattice to the tails, and produces the threshold structures seen for
broad resonances and for the virtual state (whose Lorentzian degenerates
to 1/(E - E_pole)^2 with E_pole < 0).

Two-resonance interference follows the coherent superposition of the two
pole terms, |c1 <E|z1> + c2 <E|z2>|^2 with <E|z> = <E|V|z>/(z - E); the
cross-term phase convention lives in scattering.matrix_element.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InvalidInput
from .observables import DEFAULT_ABS_TOL, DEFAULT_REL_TOL, decay_constant_total
from .poles import find_resonance
from .potential import PotentialSpec, Pole, PoleKind
from .quadrature import QuadratureRequest, integrate_semi_infinite
from .scattering import matrix_element, matrix_element_squared

__all__ = [
    "SpectrumCurve",
    "InterferenceConfig",
    "decay_energy_spectrum",
    "spectrum_curve",
    "interference_spectrum",
    "interference_curve",
    "multi_spectrum",
]


@dataclass(frozen=True)
class SpectrumCurve:
    """Sampled dP/dE with optional companion columns.

    breit_wigner holds the normalized Lorentzian of the same pole (zero
    for zero-width poles, whose Lorentzian degenerates to a delta);
    matrix_element holds M^2(E). normalization_used is the Gamma divisor,
    or the numerical renormalization integral for interference curves.
    """

    grid: np.ndarray
    dP_dE: np.ndarray
    breit_wigner: np.ndarray | None
    matrix_element: np.ndarray | None
    normalization_used: float


@dataclass(frozen=True)
class InterferenceConfig:
    """Resonant-expansion coefficients for a two-pole superposition."""

    c1: complex = 1.0 / math.sqrt(2.0)
    c2: complex = 1.0 / math.sqrt(2.0)
    renormalize: bool = True

    def __post_init__(self):
        if self.c1 == 0 and self.c2 == 0:
            raise InvalidInput("at least one interference coefficient must be nonzero")


def _spectrum_kinds(pole: Pole) -> None:
    if pole.kind not in (PoleKind.RESONANCE, PoleKind.BOUND, PoleKind.VIRTUAL_STATE):
        raise InvalidInput("decay spectra are defined for resonance, bound and virtual poles")


def decay_energy_spectrum(
    spec: PotentialSpec,
    pole: Pole,
    e,
    gamma_total: float | None = None,
    rel_tol: float = DEFAULT_REL_TOL,
):
    """dP/dE at energy e (scalar or array).

    gamma_total lets callers reuse a precomputed decay constant; otherwise
    it is computed on demand (and cached by the observables layer).
    """
    _spectrum_kinds(pole)
    if gamma_total is None:
        gamma_total = decay_constant_total(spec, pole, rel_tol=rel_tol)
    e = np.asarray(e, dtype=float)
    denom = (e - pole.e_R) ** 2 + (0.5 * pole.gamma_R) ** 2
    out = matrix_element_squared(spec, pole, e) / denom / gamma_total
    return float(out) if out.ndim == 0 else out


def _breit_wigner(pole: Pole, e: np.ndarray) -> np.ndarray:
    hw = 0.5 * pole.gamma_R
    if hw <= 0.0:
        return np.zeros_like(e)
    return (hw / np.pi) / ((e - pole.e_R) ** 2 + hw * hw)


def spectrum_curve(
    spec: PotentialSpec,
    pole: Pole,
    e_min: float,
    e_max: float,
    points: int,
    rel_tol: float = DEFAULT_REL_TOL,
) -> SpectrumCurve:
    """Uniformly sampled spectrum with Breit-Wigner and M^2 companions."""
    if not (0.0 < e_min < e_max):
        raise InvalidInput("need 0 < e_min < e_max")
    if points < 2:
        raise InvalidInput("need at least two grid points")
    _spectrum_kinds(pole)
    grid = np.linspace(e_min, e_max, points)
    gamma_total = decay_constant_total(spec, pole, rel_tol=rel_tol)
    return SpectrumCurve(
        grid=grid,
        dP_dE=decay_energy_spectrum(spec, pole, grid, gamma_total=gamma_total),
        breit_wigner=_breit_wigner(pole, grid),
        matrix_element=matrix_element_squared(spec, pole, grid),
        normalization_used=gamma_total,
    )


def _coherent_sum(spec, pole1, pole2, cfg, e):
    amp = cfg.c1 * matrix_element(spec, pole1, e) / (pole1.z - e)
    amp = amp + cfg.c2 * matrix_element(spec, pole2, e) / (pole2.z - e)
    return np.abs(amp) ** 2


@lru_cache(maxsize=128)
def _interference_norm(
    spec: PotentialSpec,
    pole1: Pole,
    pole2: Pole,
    cfg: InterferenceConfig,
    rel_tol: float,
) -> float:
    req = QuadratureRequest(
        peak_center=pole1.e_R,
        peak_halfwidth=0.5 * pole1.gamma_R,
        oscillation_wavenumber=math.pi / spec.a,
        rel_tol=rel_tol,
        abs_tol=DEFAULT_ABS_TOL,
    )
    extra = tuple(
        pole2.e_R + s * j * 0.5 * pole2.gamma_R
        for j in (1.0, 2.0, 4.0, 8.0, 16.0, 32.0)
        for s in (-1.0, 1.0)
    )
    value, _ = integrate_semi_infinite(
        lambda e: _coherent_sum(spec, pole1, pole2, cfg, e), req, extra_edges=extra
    )
    return value


def interference_spectrum(
    spec: PotentialSpec,
    pole1: Pole,
    pole2: Pole,
    cfg: InterferenceConfig,
    e,
    rel_tol: float = DEFAULT_REL_TOL,
):
    """Two-resonance decay spectrum at energy e.

    Equals |c1|^2 M1^2/D1 + |c2|^2 M2^2/D2 plus the cross term
    2 Re[c1 conj(c2) <E|V|z1> conj(<E|V|z2>) / ((z1-E)(conj(z2)-E))];
    with cfg.renormalize the curve is divided by its own integral over
    (0, inf) so it is again a probability density.
    """
    if pole1.kind is not PoleKind.RESONANCE or pole2.kind is not PoleKind.RESONANCE:
        raise InvalidInput("interference spectra are defined for resonance pairs")
    e = np.asarray(e, dtype=float)
    if np.any(e <= 0):
        raise InvalidInput("scattering energy must be positive")
    out = _coherent_sum(spec, pole1, pole2, cfg, e)
    if cfg.renormalize:
        out = out / _interference_norm(spec, pole1, pole2, cfg, rel_tol)
    return float(out) if out.ndim == 0 else out


def interference_curve(
    spec: PotentialSpec,
    pole1: Pole,
    pole2: Pole,
    cfg: InterferenceConfig,
    e_min: float,
    e_max: float,
    points: int,
    rel_tol: float = DEFAULT_REL_TOL,
) -> SpectrumCurve:
    """Sampled interference spectrum (no companion columns)."""
    if not (0.0 < e_min < e_max):
        raise InvalidInput("need 0 < e_min < e_max")
    if points < 2:
        raise InvalidInput("need at least two grid points")
    grid = np.linspace(e_min, e_max, points)
    norm = (
        _interference_norm(spec, pole1, pole2, cfg, rel_tol) if cfg.renormalize else 1.0
    )
    values = _coherent_sum(spec, pole1, pole2, cfg, grid) / norm
    return SpectrumCurve(
        grid=grid,
        dP_dE=values,
        breit_wigner=None,
        matrix_element=None,
        normalization_used=norm,
    )


def multi_spectrum(
    spec: PotentialSpec,
    indices,
    e_min: float,
    e_max: float,
    points: int,
    rel_tol: float = DEFAULT_REL_TOL,
) -> list[SpectrumCurve]:
    """Spectrum curves for several resonance indices on a shared window."""
    return [
        spectrum_curve(spec, find_resonance(spec, n), e_min, e_max, points, rel_tol)
        for n in indices
    ]
