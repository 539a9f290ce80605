"""Jost functions, S-matrix, residues, wavefunction, matrix element."""

import cmath
import math

import numpy as np
import pytest

from deltashell import (
    InvalidInput,
    PoleHit,
    PoleKind,
    PotentialSpec,
    enumerate_poles,
    find_bound_state,
    find_resonance,
    golden_rule_sharp,
    jost,
    matrix_element,
    matrix_element_squared,
    resonant_wavefunction,
    s_matrix,
    s_matrix_energy,
    zeldovich_norm,
)


@pytest.fixture(scope="module")
def spec100():
    return PotentialSpec(lam=100.0)


@pytest.fixture(scope="module")
def table1_poles(spec100):
    return enumerate_poles(spec100, 8)


def test_jost_conjugate_pair_on_real_axis():
    rng = np.random.default_rng(3)
    for lam in (0.5, 10.0, -0.5, -10.0):
        spec = PotentialSpec(lam=lam)
        for k in rng.uniform(0.05, 60.0, size=40):
            pair = jost(spec, complex(k))
            assert abs(pair.j1 - pair.j2.conjugate()) <= 1e-14 * max(1.0, abs(pair.j1))


def test_jost_vanishes_at_pole(spec100, table1_poles):
    for pole in table1_poles:
        assert abs(jost(spec100, pole.k).j2) <= 1e-12


def test_jost_rejects_zero():
    with pytest.raises(InvalidInput):
        jost(PotentialSpec(lam=1.0), 0.0)


def test_free_particle_limit():
    spec = PotentialSpec(lam=1e-12)
    pair = jost(spec, 2.0 + 0j)
    assert abs(pair.j1 - (-0.5j)) < 1e-12
    assert abs(pair.j2 - 0.5j) < 1e-12
    assert abs(s_matrix(spec, 2.0 + 0j) - 1.0) < 1e-11


@pytest.mark.parametrize("lam", (0.5, 10.0, 100.0, -0.5, -10.0, -100.0))
def test_unitarity_on_real_axis(lam):
    spec = PotentialSpec(lam=lam)
    k = np.logspace(-2, 2, 400).astype(complex)
    s = s_matrix(spec, k)
    assert np.max(np.abs(np.abs(s) - 1.0)) <= 1e-12


def test_pole_hit_detection(spec100, table1_poles):
    with pytest.raises(PoleHit):
        s_matrix(spec100, table1_poles[0].k)


def test_phase_winding_through_sharp_resonance(spec100):
    pole = find_resonance(spec100, 1)
    e = np.linspace(pole.e_R - 10 * pole.gamma_R, pole.e_R + 10 * pole.gamma_R, 4001)
    s = s_matrix(spec100, np.sqrt(e).astype(complex))
    winding = np.unwrap(np.angle(s))[-1] - np.unwrap(np.angle(s))[0]
    # finite window: the arctan jump is short of 2 pi by 4 atan(1/20) ~ 0.2
    assert abs(winding - 2.0 * math.pi) < 0.05 * 2.0 * math.pi


def test_jost_derivative_against_finite_differences(spec100, table1_poles):
    h = 1e-6
    for pole in table1_poles:
        analytic = 1j * (1.0 + spec100.lam * cmath.exp(2j * pole.k * spec100.a)) / (2.0 * pole.k)
        fd = (jost(spec100, pole.k + h).j2 - jost(spec100, pole.k - h).j2) / (2.0 * h)
        assert abs(analytic - fd) <= 1e-6 * abs(analytic)


def _contour_residue(spec, pole, samples=4096):
    # (1/2 pi i) closed-contour integral of S(E) on a circle of radius
    # gamma_R/4 around the pole energy; trapezoid on a periodic analytic
    # integrand converges spectrally
    rho = 0.25 * pole.gamma_R
    theta = np.linspace(0.0, 2.0 * np.pi, samples, endpoint=False)
    e = pole.z + rho * np.exp(1j * theta)
    s = s_matrix_energy(spec, e)
    return np.mean(s * rho * np.exp(1j * theta))


@pytest.mark.parametrize("lam,n", [(100.0, 1), (100.0, 3), (10.0, 1), (10.0, 4)])
def test_energy_residue_against_contour_oracle(lam, n):
    spec = PotentialSpec(lam=lam)
    pole = find_resonance(spec, n)
    norm = zeldovich_norm(spec, pole)
    oracle = _contour_residue(spec, pole)
    assert abs(norm.residue_E - oracle) <= 1e-8 * abs(oracle)


def test_normalization_identities(spec100, table1_poles):
    for pole in table1_poles:
        norm = zeldovich_norm(spec100, pole)
        assert norm.n_r_squared == 1j * norm.residue_k
        assert abs(norm.residue_E - 2.0 * pole.k * norm.residue_k) == 0.0
        assert norm.abs_n_r_squared == abs(norm.n_r_squared)


def test_pole_strength_along_shrinking_ray(spec100):
    pole = find_resonance(spec100, 1)
    res_k = zeldovich_norm(spec100, pole).residue_k
    direction = cmath.exp(0.3j)
    for t, tol in ((1e-6, 1e-3), (1e-9, 1e-6)):
        k = pole.k + t * direction
        strength = abs((k - pole.k) * s_matrix(spec100, k))
        assert abs(strength - abs(res_k)) <= tol * abs(res_k)


def test_bound_state_norm_is_real_positive():
    spec = PotentialSpec(lam=-10.0)
    norm = zeldovich_norm(spec, find_bound_state(spec))
    assert abs(norm.n_r_squared.imag) <= 1e-12 * norm.abs_n_r_squared
    assert norm.n_r_squared.real > 0.0


def test_wavefunction_regular_at_origin(spec100, table1_poles):
    for pole in table1_poles[:3]:
        assert resonant_wavefunction(spec100, pole, 0.0) == 0.0


def test_wavefunction_continuity_at_shell(spec100, table1_poles):
    a = spec100.a
    for pole in table1_poles:
        norm = zeldovich_norm(spec100, pole)
        n_r = np.sqrt(complex(norm.n_r_squared))
        inside = n_r * np.sin(pole.k * a) / jost(spec100, pole.k).j1
        outside = n_r * np.exp(1j * pole.k * a)
        assert abs(inside - outside) <= 1e-10 * abs(outside)


def test_wavefunction_continuity_bound_state():
    spec = PotentialSpec(lam=-10.0)
    pole = find_bound_state(spec)
    eps = 1e-9
    below = resonant_wavefunction(spec, pole, spec.a - eps)
    above = resonant_wavefunction(spec, pole, spec.a + eps)
    assert abs(below - above) <= 1e-6 * abs(above)


def test_wavefunction_outgoing_growth(spec100):
    pole = find_resonance(spec100, 3)
    r = np.array([2.0, 5.0, 10.0, 20.0])
    u = resonant_wavefunction(spec100, pole, r)
    expected = np.exp(pole.beta_R * r)
    ratio = np.abs(u) / expected
    assert np.allclose(ratio, ratio[0], rtol=1e-12)
    assert np.all(np.diff(np.abs(u)) > 0)


def test_matrix_element_zeros_on_lattice(spec100):
    pole = find_resonance(spec100, 3)
    for m in (1, 2, 5, 9):
        e = (m * math.pi / spec100.a) ** 2
        assert matrix_element_squared(spec100, pole, e) < 1e-20


def test_matrix_element_positive_and_rejects_nonpositive_energy(spec100):
    pole = find_resonance(spec100, 2)
    grid = np.linspace(0.3, 400.0, 2000)
    assert np.all(matrix_element_squared(spec100, pole, grid) >= 0.0)
    with pytest.raises(InvalidInput):
        matrix_element_squared(spec100, pole, 0.0)
    with pytest.raises(InvalidInput):
        matrix_element_squared(spec100, pole, -1.0)


def test_matrix_element_reproduces_sharp_width(spec100):
    # reference sharp width of the third resonance through the Golden-Rule form
    pole = find_resonance(spec100, 3)
    assert 2.0 * math.pi * matrix_element_squared(spec100, pole, pole.e_R) == pytest.approx(
        0.3087, abs=1e-4
    )
    gbs, _ = golden_rule_sharp(spec100, pole)
    assert 2.0 * math.pi * matrix_element_squared(spec100, pole, pole.e_R) == pytest.approx(
        gbs, rel=1e-12
    )


def test_matrix_element_envelope_decays(spec100):
    # cell maxima of M^2 between consecutive lattice zeros fall off like 1/sqrt(E)
    pole = find_resonance(spec100, 1)
    maxima = []
    for m in range(10, 16):
        e = np.linspace((m * math.pi) ** 2 + 1e-6, ((m + 1) * math.pi) ** 2 - 1e-6, 400)
        maxima.append(float(np.max(matrix_element_squared(spec100, pole, e))))
    assert all(a > b for a, b in zip(maxima, maxima[1:]))
    mids = np.array([((m + 0.5) * math.pi) ** 2 for m in range(10, 16)])
    scaled = np.array(maxima) * np.sqrt(mids)
    assert np.max(scaled) / np.min(scaled) < 1.05


def test_complex_matrix_element_modulus(spec100):
    pole = find_resonance(spec100, 2)
    grid = np.linspace(0.5, 150.0, 500)
    m = matrix_element(spec100, pole, grid)
    m2 = matrix_element_squared(spec100, pole, grid)
    assert np.allclose(np.abs(m) ** 2, m2, rtol=1e-12, atol=0.0)


def test_anti_resonance_rejected_by_matrix_element(spec100):
    from deltashell import find_anti_resonance

    anti = find_anti_resonance(spec100, 1)
    assert anti.kind is PoleKind.ANTI_RESONANCE
    # the matrix element itself is defined for any pole; observables guard kinds
    val = matrix_element_squared(spec100, anti, 5.0)
    assert val >= 0.0
