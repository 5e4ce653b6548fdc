import math

import numpy as np
import pytest
from scipy import integrate

from exvdw.core import MediumState, TwoLevelAtom
from exvdw.errors import NonPositiveDensity, NonPositiveTemperature, NotApplicable
from exvdw.media import (
    SlabProblem, boltzmann_populations, media_force, media_force_lifshitz_quadrature,
    media_force_pairwise, media_force_thermal, media_potential_closed, media_potential_per_area,
)

A, B = TwoLevelAtom(1.0, 0.0, 1.0), TwoLevelAtom(0.9, 0.02, 1.0)
COLD = SlabProblem(MediumState(A, 1.0), MediumState(B, 1.0), 1.0)


def test_boltzmann_examples():
    m = boltzmann_populations(A, 1.0, 0.5)
    assert m.n_g == pytest.approx(0.880797, abs=1e-6)
    assert m.n_e == pytest.approx(0.119203, abs=1e-6)
    cold = boltzmann_populations(A, 1.0, 1e-3)
    assert (cold.n_g, cold.n_e) == (1.0, 0.0)
    hot = boltzmann_populations(A, 1.0, 1e6)
    assert hot.n_g == pytest.approx(0.5, abs=1e-6) and hot.n_e == pytest.approx(0.5, abs=1e-6)


def test_boltzmann_errors():
    with pytest.raises(NonPositiveTemperature):
        boltzmann_populations(A, 1.0, 0.0)
    with pytest.raises(NonPositiveDensity):
        boltzmann_populations(A, -1.0, 1.0)


def test_cold_media_agree():
    f = media_force(COLD)
    assert f.qed == f.lifshitz == pytest.approx(0.18372, abs=1e-5)


def test_equal_populations_cancel():
    p = SlabProblem(MediumState(A, 0.5, 0.5), MediumState(B, 0.7, 0.7), 1.0)
    f = media_force(p)
    assert f.qed == 0.0 and f.lifshitz == 0.0


def test_inverse_cube():
    p = SlabProblem(MediumState(A, 0.8, 0.2), MediumState(B, 0.6, 0.1), 1.1)
    q = SlabProblem(p.medium_a, p.medium_b, 2.2)
    assert media_force(q).qed == media_force(p).qed / 8
    assert media_force(q).lifshitz == media_force(p).lifshitz / 8


def test_pairwise_sum_reproduces_closed_form():
    p = SlabProblem(MediumState(A, 0.8, 0.2), MediumState(B, 0.6, 0.4), 1.3)
    assert media_force_pairwise(p) == pytest.approx(media_force(p).qed, rel=1e-13)


def test_lifshitz_closed_needs_narrow_lines():
    wide = SlabProblem(MediumState(A, 1.0), MediumState(TwoLevelAtom(0.9, 1.0), 1.0), 1.0)
    with pytest.raises(NotApplicable):
        media_force(wide)
    assert math.isfinite(media_force_lifshitz_quadrature(wide))


def test_thermal_examples():
    f = media_force_thermal(TwoLevelAtom(0.9), TwoLevelAtom(1.0, 0.02), 1.0, 1.0, 0.3, 1.0)
    assert f.qed == pytest.approx(0.21354, abs=1e-5)
    # literal thermal Lifshitz arithmetic; see the acceptance suite for the published figure
    ea, eb = math.exp(-3), math.exp(-10 / 3)
    lif = math.pi / 9 * (1 - ea) * (1 - eb) / ((1 + ea) * (1 + eb)) * 1.9 / (1.9**2 + 1e-4)
    assert f.lifshitz == pytest.approx(lif, rel=1e-14)
    hot = media_force_thermal(TwoLevelAtom(0.9), TwoLevelAtom(1.0, 0.02), 1.0, 1.0, 1e6, 1.0)
    assert abs(hot.qed) < 1e-5 and abs(hot.lifshitz) < 1e-5


@pytest.mark.parametrize("T", [0.05, 0.3, 1.0, 10.0])
@pytest.mark.parametrize("wa", [0.5, 0.9, 1.2])
def test_thermal_consistency(T, wa):
    a, b = TwoLevelAtom(wa), TwoLevelAtom(1.0, 0.02)
    direct = media_force_thermal(a, b, 2.0, 0.5, T, 1.4)
    composed = media_force(SlabProblem(boltzmann_populations(a, 2.0, T),
                                       boltzmann_populations(b, 0.5, T), 1.4))
    assert direct.qed == pytest.approx(composed.qed, rel=1e-12, abs=1e-300)
    assert direct.lifshitz == pytest.approx(composed.lifshitz, rel=1e-12, abs=1e-300)


def test_resonant_term_nonnegative():
    for T in np.geomspace(0.01, 100, 25):
        for ratio in np.linspace(0.5, 1.5, 21):
            a, b = TwoLevelAtom(ratio), TwoLevelAtom(1.0, 0.02)
            f = media_force_thermal(a, b, 1.0, 1.0, T, 1.0)
            ma, mb = boltzmann_populations(a, 1.0, T), boltzmann_populations(b, 1.0, T)
            s_plus = (ratio + 1) / ((ratio + 1) ** 2 + 1e-4)
            first = math.pi / 9 * (ma.n_g * mb.n_g - ma.n_e * mb.n_e) * s_plus
            assert f.qed >= first - 1e-15


def test_high_temperature_decay():
    a, b = TwoLevelAtom(0.9), TwoLevelAtom(1.0, 0.02)
    Ts = np.geomspace(1.0, 1e6, 60)
    qed = [media_force_thermal(a, b, 1.0, 1.0, T, 1.0).qed for T in Ts]
    lif = [media_force_thermal(a, b, 1.0, 1.0, T, 1.0).lifshitz for T in Ts]
    assert np.all(np.diff(np.abs(qed)) < 0)
    assert np.all(np.diff(np.abs(lif)) < 0)


def test_lifshitz_quadrature_benchmark():
    ident = MediumState(TwoLevelAtom(1.0), 1.0)
    assert media_force_lifshitz_quadrature(SlabProblem(ident, ident, 1.0)) == pytest.approx(
        math.pi / 18, abs=1e-8)


def test_lifshitz_quadrature_against_scipy():
    p = SlabProblem(MediumState(A, 0.9, 0.1), MediumState(B, 0.8, 0.2), 1.0)

    def chi(m, u, g):
        w = m.species.omega
        return 4 * math.pi * (m.n_g - m.n_e) * (m.species.d2 / 3) * 2 * w / (w * w + (u + g) ** 2)

    ref, _ = integrate.quad(lambda u: chi(p.medium_a, u, 0.0) * chi(p.medium_b, u, 0.01),
                            0, np.inf, epsabs=0, epsrel=1e-12, limit=500)
    assert media_force_lifshitz_quadrature(p) == pytest.approx(ref / (32 * math.pi**2),
                                                               rel=1e-9)


def test_lifshitz_quadrature_null():
    p = SlabProblem(MediumState(A, 0.5, 0.5), MediumState(B, 1.0), 1.0)
    assert abs(media_force_lifshitz_quadrature(p)) < 1e-14


def test_lifshitz_quadrature_converges_to_closed_form():
    # the closed form drops the width from the imaginary-axis integrand
    gaps = []
    for g in (1e-2, 1e-3, 1e-4):
        p = SlabProblem(MediumState(A, 1.0), MediumState(TwoLevelAtom(0.9, g), 1.0), 1.0)
        c = media_force(p).lifshitz
        gaps.append(abs(media_force_lifshitz_quadrature(p) - c) / c)
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] < 1e-4


def test_potential_examples():
    assert media_potential_per_area(COLD) == pytest.approx(-0.09186, abs=1e-5)
    assert media_potential_closed(COLD) == pytest.approx(-0.09186, abs=1e-5)
    far = SlabProblem(COLD.medium_a, COLD.medium_b, 2.0)
    assert media_potential_per_area(far) == pytest.approx(media_potential_per_area(COLD) / 4,
                                                          rel=1e-10)


@pytest.mark.parametrize("na, nb", [((1.0, 0.0), (1.0, 0.0)), ((0.7, 0.3), (0.6, 0.4)),
                                    ((0.2, 0.8), (0.9, 0.1))])
def test_force_is_derivative_of_potential(na, nb):
    ma, mb = MediumState(A, *na), MediumState(B, *nb)
    h = 1e-5
    u = [media_potential_per_area(SlabProblem(ma, mb, L)) for L in (1 - h, 1 + h)]
    assert (u[1] - u[0]) / (2 * h) == pytest.approx(media_force(SlabProblem(ma, mb, 1.0)).qed,
                                                    rel=1e-6)
