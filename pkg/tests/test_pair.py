import math

import pytest

from exvdw.core import EXCITED, GROUND, PairConfiguration, TwoLevelAtom
from exvdw.errors import PoleOnAxis, RegulatorTooLarge, ZeroSeparation
from exvdw.pair import (
    pair_closed_nearzone, pair_quadrature_nearzone, pair_spectral_extrapolated,
    pair_spectral_general, richardson_zero,
)
from exvdw.propagator import contracted_pair_kernel


def cfg(sa, sb, wa=1.0, wb=0.9, g=0.02, da=1.0, db=1.0):
    return PairConfiguration(TwoLevelAtom(wa, 0.0, da), sa, TwoLevelAtom(wb, g, db), sb)


EG, GE, GG, EE = (cfg(EXCITED, GROUND), cfg(GROUND, EXCITED), cfg(GROUND, GROUND),
                  cfg(EXCITED, EXCITED))


def test_closed_examples():
    assert pair_closed_nearzone(EG, 1.0).shift == pytest.approx(6.6007, abs=1e-4)
    assert pair_closed_nearzone(EG, 1.0).half_width == pytest.approx(0.66007, abs=1e-5)
    assert pair_closed_nearzone(GG, 1.0).shift == pytest.approx(-0.35087, abs=1e-5)
    assert pair_closed_nearzone(EE, 1.0).shift == pytest.approx(0.35087, abs=1e-5)


def test_resonant_eg_is_zero():
    r = pair_closed_nearzone(cfg(EXCITED, GROUND, wa=0.9), 1.0)
    assert r.shift == 0.0
    assert r.half_width == pytest.approx((2 / 3) / 0.01)


def test_degenerate_resonance_flagged():
    r = pair_closed_nearzone(cfg(EXCITED, GROUND, wa=0.9, g=0.0), 1.0)
    assert (r.shift, r.half_width) == (0.0, 0.0)
    assert "degenerate-resonance" in r.flags


@pytest.mark.parametrize("wa", [0.5, 0.89, 0.95, 1.3])
def test_antisymmetry_and_sign_law(wa):
    eg = pair_closed_nearzone(cfg(EXCITED, GROUND, wa=wa), 1.7).shift
    ge = pair_closed_nearzone(cfg(GROUND, EXCITED, wa=wa), 1.7).shift
    gg = pair_closed_nearzone(cfg(GROUND, GROUND, wa=wa), 1.7).shift
    ee = pair_closed_nearzone(cfg(EXCITED, EXCITED, wa=wa), 1.7).shift
    assert eg + ge == 0.0
    assert math.copysign(1, eg) == math.copysign(1, wa - 0.9)
    assert gg < 0 and ee == -gg


@pytest.mark.parametrize("c", [EG, GE, GG, EE])
def test_inverse_sixth_power(c):
    assert pair_closed_nearzone(c, 2.4).shift == pair_closed_nearzone(c, 1.2).shift / 64


def test_london_limit():
    london = -(2 / 3) / 1.9
    errs = []
    for g in (1e-2, 1e-3):
        s = pair_closed_nearzone(cfg(GROUND, GROUND, g=g), 1.0).shift
        errs.append(abs(s / london - 1))
    assert errs[0] / errs[1] == pytest.approx(100, rel=1e-3)


@pytest.mark.parametrize("c", [EG, GE, GG, EE], ids=["EG", "GE", "GG", "EE"])
def test_quadrature_matches_closed(c):
    q = pair_quadrature_nearzone(c, 1.0)
    k = pair_closed_nearzone(c, 1.0)
    assert abs(q.complex - k.complex) <= 1e-5 * abs(k.complex)
    assert q.half_width >= -1e-12


def test_ground_pair_width_is_small_but_present():
    # the closed form keeps the Lorentzian width for GG; quadrature confirms it
    q = pair_quadrature_nearzone(GG, 1.0).half_width
    assert q == pytest.approx((2 / 3) * 0.01 / (1.9**2 + 1e-4), rel=1e-8)


def test_tail_bound():
    # the integrand beyond |omega| = 1e4 is below 1e-8 of the total
    from exvdw.response import COHERENT, polarizability
    a = polarizability(EG.atom_a, EXCITED, COHERENT, 1e4)
    b = polarizability(EG.atom_b, GROUND, COHERENT, 1e4)
    tail = 2 * abs(a * b) * 1e4 / 3
    total = abs(pair_quadrature_nearzone(EG, 1.0).complex) * 2 * math.pi / 3
    assert tail < 1e-8 * total


def test_quadrature_errors():
    with pytest.raises(PoleOnAxis):
        pair_quadrature_nearzone(cfg(EXCITED, GROUND, g=0.0), 1.0)
    with pytest.raises(ZeroSeparation):
        pair_closed_nearzone(EG, 0.0)
    with pytest.raises(ZeroSeparation):
        pair_quadrature_nearzone(EG, -1.0)


@pytest.mark.parametrize("c, ref", [(EG, 6.6007e18), (GG, -0.35087e18)], ids=["EG", "GG"])
def test_spectral_near_zone(c, ref):
    r = pair_spectral_extrapolated(c, 1e-3)
    assert r.shift == pytest.approx(pair_closed_nearzone(c, 1e-3).shift, rel=1e-3)
    assert r.shift == pytest.approx(ref, rel=1e-3)
    assert "unvalidated-far-zone" not in r.flags


def test_spectral_flags_and_guards():
    with pytest.raises(RegulatorTooLarge):
        pair_spectral_general(EG, 1e-3, 0.5)
    with pytest.raises(ValueError):
        pair_spectral_general(EG, 1e-3, 0.0)
    r = pair_spectral_general(EG, 0.5, 0.002)
    assert "unvalidated-far-zone" in r.flags


def test_static_kernel_consistency():
    # dyadic contraction at omega -> 0 equals the near-zone prefactor (2/3)/R^6
    for R in (0.5, 1.0, 2.0):
        assert contracted_pair_kernel(1e-7, R).real == pytest.approx(2 / 3 / R**6, rel=1e-8)


def test_richardson_exact_for_polynomials():
    xs = [0.4, 0.2, 0.1]
    assert richardson_zero(xs, [3 + 2 * x - x * x for x in xs]) == pytest.approx(3)
