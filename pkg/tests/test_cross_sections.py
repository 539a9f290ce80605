"""Cross section and approximants: unitarity, ratio identities, peak algebra."""

import math

import numpy as np
import pytest

from deltashell import (
    InvalidInput,
    PotentialSpec,
    cross_section_bundle,
    cross_section_e_unitarized,
    cross_section_exact,
    cross_section_k_unitarized,
    cross_section_laurent,
    cross_section_two_pole,
    find_resonance,
    find_virtual_state,
    unitarized_ratio,
    zeldovich_norm,
)


def test_vanishes_in_free_limit():
    spec = PotentialSpec(lam=1e-9)
    for e in (0.5, 5.0, 50.0):
        assert cross_section_exact(spec, e) < 1e-15


@pytest.mark.parametrize("lam", (0.5, 10.0, 100.0, -10.0))
def test_unitarity_bound(lam):
    spec = PotentialSpec(lam=lam)
    e = np.linspace(1e-3, 900.0, 5000)
    sigma = cross_section_exact(spec, e)
    assert np.all(sigma <= 4.0 * np.pi / e + 1e-9)


def test_exact_peak_near_resonance():
    spec = PotentialSpec(lam=100.0)
    pole = find_resonance(spec, 3)
    e = np.linspace(pole.e_R - 5 * pole.gamma_R, pole.e_R + 5 * pole.gamma_R, 8001)
    peak_e = e[np.argmax(cross_section_exact(spec, e))]
    assert pole.e_R - pole.gamma_R <= peak_e <= pole.e_R + pole.gamma_R


def test_laurent_proportional_to_e_unitarized():
    spec = PotentialSpec(lam=100.0)
    pole = find_resonance(spec, 3)
    e = np.linspace(60.0, 110.0, 500)
    ratio = cross_section_laurent(spec, pole, e) / cross_section_e_unitarized(spec, pole, e)
    expected = abs(zeldovich_norm(spec, pole).residue_E) ** 2 / pole.gamma_R**2
    assert np.allclose(ratio, expected, rtol=1e-12)


def test_laurent_peak_close_to_exact():
    spec = PotentialSpec(lam=100.0)
    pole = find_resonance(spec, 3)
    exact_peak = cross_section_exact(spec, pole.e_R)
    laurent_peak = cross_section_laurent(spec, pole, pole.e_R)
    assert abs(laurent_peak - exact_peak) <= 0.10 * exact_peak


def test_laurent_high_energy_falloff():
    spec = PotentialSpec(lam=100.0)
    pole = find_resonance(spec, 3)
    assert cross_section_laurent(spec, pole, 1e8) < 1e-18


def test_e_unitarized_peak_value_exact():
    spec = PotentialSpec(lam=100.0)
    pole = find_resonance(spec, 3)
    peak = cross_section_e_unitarized(spec, pole, pole.e_R)
    assert peak == pytest.approx(4.0 * math.pi / pole.e_R, rel=1e-14)


def test_e_unitarized_s_approximant_unimodular():
    pole = find_resonance(PotentialSpec(lam=100.0), 3)
    for e in np.linspace(60.0, 110.0, 50):
        s_approx = (e - pole.z.conjugate()) / (e - pole.z)
        assert abs(abs(s_approx) - 1.0) < 1e-14


def test_k_unitarized_peak_algebra():
    spec = PotentialSpec(lam=100.0)
    pole = find_resonance(spec, 3)
    e_at_alpha = pole.alpha_R**2
    peak = cross_section_k_unitarized(spec, pole, e_at_alpha)
    assert peak == pytest.approx(4.0 * math.pi / e_at_alpha, rel=1e-14)


def test_unitarized_ratio_identity_and_value():
    spec = PotentialSpec(lam=100.0)
    pole = find_resonance(spec, 3)
    e = np.linspace(pole.e_R - 10 * pole.gamma_R, pole.e_R + 10 * pole.gamma_R, 1000)
    ratio = unitarized_ratio(spec, pole, e)  # raises if the identity breaks
    quotient = cross_section_e_unitarized(spec, pole, e) / cross_section_k_unitarized(
        spec, pole, e
    )
    assert np.max(np.abs(ratio - quotient)) <= 1e-12 * np.max(ratio)
    at_peak = unitarized_ratio(spec, pole, pole.e_R)
    assert 0.999 <= at_peak <= 1.001


def test_e_vs_k_unitarized_indistinguishable_at_figure_scale():
    spec = PotentialSpec(lam=100.0)
    pole = find_resonance(spec, 3)
    e = np.linspace(pole.e_R - 10 * pole.gamma_R, pole.e_R + 10 * pole.gamma_R, 4001)
    sig_e = cross_section_e_unitarized(spec, pole, e)
    sig_k = cross_section_k_unitarized(spec, pole, e)
    assert np.max(np.abs(sig_e - sig_k)) <= 1e-3 * np.max(sig_e)


def test_all_approximants_within_band_near_peak():
    # the exact cross section carries a background-interference zero about
    # one width below the peak, so pointwise relative bands are meaningless
    # there; at figure scale (deviation relative to the peak height) the
    # three approximants track the exact curve and are mutually much closer
    spec = PotentialSpec(lam=100.0)
    pole = find_resonance(spec, 3)
    e = np.linspace(pole.e_R - 3 * pole.gamma_R, pole.e_R + 3 * pole.gamma_R, 2001)
    exact = cross_section_exact(spec, e)
    peak = float(np.max(exact))
    approximants = [
        cross_section_laurent(spec, pole, e),
        cross_section_e_unitarized(spec, pole, e),
        cross_section_k_unitarized(spec, pole, e),
    ]
    for approx in approximants:
        assert np.max(np.abs(approx - exact)) <= 0.25 * peak
        assert abs(np.max(approx) - peak) <= 0.10 * peak
    for i in range(len(approximants)):
        for j in range(i + 1, len(approximants)):
            mutual = np.max(np.abs(approximants[i] - approximants[j]))
            assert mutual <= 0.05 * peak


def test_two_pole_duplicate_collapses_to_four_lorentzians():
    # with both poles identical the cross term equals the direct terms,
    # so the two-pole form is exactly four times the Laurent form
    spec = PotentialSpec(lam=100.0)
    pole = find_resonance(spec, 1)
    e = np.linspace(5.0, 50.0, 300)
    double = cross_section_two_pole(spec, pole, pole, e)
    single = cross_section_laurent(spec, pole, e)
    assert np.allclose(double, 4.0 * single, rtol=1e-12)


def test_two_pole_swap_symmetry():
    spec = PotentialSpec(lam=100.0)
    p1 = find_resonance(spec, 1)
    p2 = find_resonance(spec, 2)
    e = np.linspace(5.0, 50.0, 300)
    assert np.array_equal(
        cross_section_two_pole(spec, p1, p2, e), cross_section_two_pole(spec, p2, p1, e)
    )


def test_two_pole_interference_midpoint():
    spec = PotentialSpec(lam=100.0)
    p1 = find_resonance(spec, 1)
    p2 = find_resonance(spec, 2)
    mid = 0.5 * (p1.e_R + p2.e_R)
    total = cross_section_two_pole(spec, p1, p2, mid)
    lor1 = cross_section_laurent(spec, p1, mid)
    lor2 = cross_section_laurent(spec, p2, mid)
    cross = total - lor1 - lor2
    assert cross != 0.0
    assert abs(cross) < cross_section_laurent(spec, p1, p1.e_R)
    assert abs(cross) < cross_section_laurent(spec, p2, p2.e_R)


def test_kind_and_energy_validation():
    spec = PotentialSpec(lam=-0.5)
    virt = find_virtual_state(spec)
    with pytest.raises(InvalidInput):
        cross_section_laurent(spec, virt, 1.0)
    res = find_resonance(spec, 1)
    with pytest.raises(InvalidInput):
        cross_section_exact(spec, -1.0)
    with pytest.raises(InvalidInput):
        cross_section_e_unitarized(spec, res, 0.0)


def test_bundle_columns_and_window():
    spec = PotentialSpec(lam=100.0)
    bundle = cross_section_bundle(spec, 3, points=501)
    pole = find_resonance(spec, 3)
    assert bundle.grid[0] == pytest.approx(pole.e_R - 10 * pole.gamma_R)
    assert bundle.grid[-1] == pytest.approx(pole.e_R + 10 * pole.gamma_R)
    assert bundle.two_pole is None
    assert np.all(bundle.exact <= 4 * np.pi / bundle.grid + 1e-9)
    with_second = cross_section_bundle(spec, 1, points=101, second_index=2)
    assert with_second.two_pole is not None and len(with_second.two_pole) == 101


def test_bundle_window_clipped_positive_for_broad_pole():
    spec = PotentialSpec(lam=0.5)
    bundle = cross_section_bundle(spec, 1, points=101)
    assert bundle.grid[0] > 0.0
