"""Decay widths, decay constants, the oscillation constant C, and the
sharp (Golden-Rule) approximations; one record per table row.

The decay width is the Lorentzian-weighted integral of the squared
interaction matrix element,

    Gbar = integral_0^inf  Gamma_R / ((E - E_R)^2 + (Gamma_R/2)^2) M^2(E) dE
         = (2 lam^2 / a^2) |N|^2 exp(2 beta a) * C,

and the dimensionless decay constant is Gamma = Gbar / Gamma_R. For bound
and virtual poles the Lorentzian degenerates to 1/(E - E_pole)^2 with
E_pole < 0, a proper integral that yields the decay constant directly
(Gbar itself carries an explicit Gamma_R factor and is identically zero
for zero-width poles).

The sharp approximations replace the Lorentzian by a delta function:
Gbar_sharp = 2 pi M^2(E_R), Gamma_sharp = Gbar_sharp / Gamma_R. The
perturbation-theory right-hand side (the same Lorentzian integral read as
an implicit equation for the pole width) is exposed separately so its
numerical value can be compared against Gamma_R: the two disagree for
every resonance of this potential, which is the point of computing it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InvalidInput
from .poles import enumerate_poles
from .potential import PotentialSpec, Pole, PoleKind
from .quadrature import QuadratureRequest, integrate_semi_infinite
from .scattering import matrix_element_squared, zeldovich_norm

__all__ = [
    "ObservablesRecord",
    "decay_width_differential",
    "decay_constant_differential",
    "decay_width_total",
    "decay_constant_total",
    "golden_rule_sharp",
    "perturbation_rhs",
    "observables_record",
    "table_records",
]

DEFAULT_REL_TOL = 1e-9
DEFAULT_ABS_TOL = 1e-12


@dataclass(frozen=True)
class ObservablesRecord:
    """One table row: pole identity plus every decay observable.

    gamma_bar_sharp, gamma_sharp and c_value are None for bound and
    virtual rows (their gamma_bar is identically zero and the sharp
    approximation needs a positive resonant energy).
    """

    lam: float
    kind: PoleKind
    index: int
    k: complex
    z: complex
    gamma_R: float
    gamma_bar: float
    gamma: float
    gamma_bar_sharp: float | None
    gamma_sharp: float | None
    c_value: float | None
    quadrature_error: float


def _require_kind(pole: Pole, *kinds: PoleKind) -> None:
    if pole.kind not in kinds:
        allowed = ", ".join(k.value for k in kinds)
        raise InvalidInput(f"operation defined for {allowed} poles, got {pole.kind.value}")


def _request(spec: PotentialSpec, pole: Pole, rel_tol: float, abs_tol: float) -> QuadratureRequest:
    hw = 0.5 * pole.gamma_R
    if hw <= 0.0:
        hw = 1.0 + 1e-3 * abs(pole.e_R)  # zero-width pole: floor keeps the cutoff finite
    return QuadratureRequest(
        peak_center=pole.e_R,
        peak_halfwidth=hw,
        oscillation_wavenumber=math.pi / spec.a,
        rel_tol=rel_tol,
        abs_tol=abs_tol,
    )


def decay_width_differential(spec: PotentialSpec, pole: Pole, e):
    """dGbar/dE = Gamma_R / ((E-E_R)^2 + (Gamma_R/2)^2) * M^2(E)."""
    _require_kind(pole, PoleKind.RESONANCE)
    e = np.asarray(e, dtype=float)
    lor = pole.gamma_R / ((e - pole.e_R) ** 2 + (0.5 * pole.gamma_R) ** 2)
    out = lor * matrix_element_squared(spec, pole, e)
    return float(out) if out.ndim == 0 else out


def decay_constant_differential(spec: PotentialSpec, pole: Pole, e):
    """dGamma/dE = M^2(E) / ((E-E_R)^2 + (Gamma_R/2)^2); any pole kind."""
    _require_kind(pole, PoleKind.RESONANCE, PoleKind.BOUND, PoleKind.VIRTUAL_STATE)
    e = np.asarray(e, dtype=float)
    denom = (e - pole.e_R) ** 2 + (0.5 * pole.gamma_R) ** 2
    out = matrix_element_squared(spec, pole, e) / denom
    return float(out) if out.ndim == 0 else out


@lru_cache(maxsize=512)
def _c_integral(spec: PotentialSpec, pole: Pole, rel_tol: float, abs_tol: float):
    """C = int (1/pi) (G/2)/((E-E_R)^2+(G/2)^2) * sin^2(ka)/k dE, with error."""
    e_r, hw = pole.e_R, 0.5 * pole.gamma_R
    a = spec.a

    def f(e):
        k = np.sqrt(e)
        return (hw / math.pi) / ((e - e_r) ** 2 + hw * hw) * np.sin(k * a) ** 2 / k

    return integrate_semi_infinite(f, _request(spec, pole, rel_tol, abs_tol))


@lru_cache(maxsize=512)
def _nonresonant_gamma(spec: PotentialSpec, pole: Pole, rel_tol: float, abs_tol: float):
    """Gamma for bound/virtual poles: int M^2(E)/(E - E_pole)^2 dE, with error.

    E_pole < 0 never meets the integration range, so the degenerate
    Lorentzian needs no principal value.
    """
    e_pole = pole.e_R

    def f(e):
        return matrix_element_squared(spec, pole, e) / (e - e_pole) ** 2

    return integrate_semi_infinite(f, _request(spec, pole, rel_tol, abs_tol))


def _width_prefactor(spec: PotentialSpec, pole: Pole) -> float:
    norm = zeldovich_norm(spec, pole)
    return (2.0 * spec.lam**2 / spec.a**2) * norm.abs_n_r_squared * math.exp(
        2.0 * pole.beta_R * spec.a
    )


def decay_width_total(
    spec: PotentialSpec,
    pole: Pole,
    rel_tol: float = DEFAULT_REL_TOL,
    abs_tol: float = DEFAULT_ABS_TOL,
):
    """Total decay width and the constant C as (gamma_bar, c_value).

    Bound and virtual poles return (0.0, None): the width integrand
    carries an explicit factor of the pole width, which is zero there.
    """
    _require_kind(pole, PoleKind.RESONANCE, PoleKind.BOUND, PoleKind.VIRTUAL_STATE)
    if pole.kind is not PoleKind.RESONANCE:
        return 0.0, None
    c_value, _ = _c_integral(spec, pole, rel_tol, abs_tol)
    return _width_prefactor(spec, pole) * c_value, c_value


def decay_constant_total(
    spec: PotentialSpec,
    pole: Pole,
    rel_tol: float = DEFAULT_REL_TOL,
    abs_tol: float = DEFAULT_ABS_TOL,
) -> float:
    """Dimensionless decay constant Gamma.

    Resonances: Gamma = Gbar / Gamma_R. Bound and virtual poles: direct
    quadrature of the degenerate-Lorentzian integral (1 for a bound state,
    since there the residue normalization coincides with the usual norm).
    """
    _require_kind(pole, PoleKind.RESONANCE, PoleKind.BOUND, PoleKind.VIRTUAL_STATE)
    if pole.kind is PoleKind.RESONANCE:
        gamma_bar, _ = decay_width_total(spec, pole, rel_tol, abs_tol)
        return gamma_bar / pole.gamma_R
    value, _ = _nonresonant_gamma(spec, pole, rel_tol, abs_tol)
    return value


def golden_rule_sharp(spec: PotentialSpec, pole: Pole):
    """Sharp-resonance approximations (gamma_bar_sharp, gamma_sharp).

    Replacing the Lorentzian by a delta function gives
    Gbar_sharp = (2 lam^2/a^2) sin^2(k~ a)/k~ * |N|^2 exp(2 beta a) with
    k~ = sqrt(E_R); identically equal to 2 pi M^2(E_R).
    """
    _require_kind(pole, PoleKind.RESONANCE)
    if pole.e_R <= 0.0:
        raise InvalidInput("sharp approximation needs a positive resonant energy")
    kt = math.sqrt(pole.e_R)
    gbs = _width_prefactor(spec, pole) * math.sin(kt * spec.a) ** 2 / kt
    return gbs, gbs / pole.gamma_R


def perturbation_rhs(
    spec: PotentialSpec,
    pole: Pole,
    rel_tol: float = DEFAULT_REL_TOL,
    abs_tol: float = DEFAULT_ABS_TOL,
) -> float:
    """RHS of the second-order perturbation-theory width equation.

    int Gamma_R / ((E_R - E)^2 + (Gamma_R/2)^2) M^2(E) dE. Were the
    perturbative identity exact, this would equal Gamma_R; numerically it
    equals Gbar, so RHS / Gamma_R reproduces the decay constant instead
    of 1.
    """
    _require_kind(pole, PoleKind.RESONANCE)
    e_r, g_r = pole.e_R, pole.gamma_R

    def f(e):
        lor = g_r / ((e_r - e) ** 2 + (0.5 * g_r) ** 2)
        return lor * matrix_element_squared(spec, pole, e)

    value, _ = integrate_semi_infinite(f, _request(spec, pole, rel_tol, abs_tol))
    return value


def observables_record(
    spec: PotentialSpec,
    pole: Pole,
    rel_tol: float = DEFAULT_REL_TOL,
    abs_tol: float = DEFAULT_ABS_TOL,
) -> ObservablesRecord:
    """Assemble the full table row for one pole."""
    _require_kind(pole, PoleKind.RESONANCE, PoleKind.BOUND, PoleKind.VIRTUAL_STATE)
    if pole.kind is PoleKind.RESONANCE:
        c_value, c_err = _c_integral(spec, pole, rel_tol, abs_tol)
        pref = _width_prefactor(spec, pole)
        gamma_bar = pref * c_value
        gamma = gamma_bar / pole.gamma_R
        gbs, gs = golden_rule_sharp(spec, pole)
        qerr = pref * c_err
    else:
        gamma, qerr = _nonresonant_gamma(spec, pole, rel_tol, abs_tol)
        gamma_bar, c_value, gbs, gs = 0.0, None, None, None
    return ObservablesRecord(
        lam=spec.lam,
        kind=pole.kind,
        index=pole.index,
        k=pole.k,
        z=pole.z,
        gamma_R=pole.gamma_R,
        gamma_bar=gamma_bar,
        gamma=gamma,
        gamma_bar_sharp=gbs,
        gamma_sharp=gs,
        c_value=c_value,
        quadrature_error=qerr,
    )


def table_records(
    spec: PotentialSpec,
    count: int,
    rel_tol: float = DEFAULT_REL_TOL,
    abs_tol: float = DEFAULT_ABS_TOL,
) -> list[ObservablesRecord]:
    """Rows for the bound/virtual pole (when present) plus resonances 1..count."""
    return [
        observables_record(spec, pole, rel_tol, abs_tol)
        for pole in enumerate_poles(spec, count)
    ]
