"""Property-based checks of the physical invariants."""

import math

from hypothesis import assume, given, settings, strategies as st

from exvdw.core import EXCITED, GROUND, MediumState, PairConfiguration, TwoLevelAtom
from exvdw.halfspace import SurfaceProblem, surface_potential_qed, surface_potential_spectral
from exvdw.media import (
    SlabProblem, boltzmann_populations, media_force, media_force_pairwise, media_force_thermal,
)
from exvdw.pair import pair_closed_nearzone, pair_quadrature_nearzone

freq = st.floats(0.2, 5.0)
width_ratio = st.floats(1e-3, 0.2)
dipole = st.floats(0.1, 10.0)
state = st.sampled_from([GROUND, EXCITED])
dist = st.floats(0.1, 10.0)
density = st.floats(0.0, 5.0)


def pair(wa, wb, gr, da, db, sa, sb):
    return PairConfiguration(TwoLevelAtom(wa, 0.0, da), sa, TwoLevelAtom(wb, gr * wb, db), sb)


@settings(max_examples=200, deadline=None)
@given(wa=freq, wb=freq, gr=width_ratio, da=dipole, db=dipole, R=dist)
def test_closed_form_symmetries(wa, wb, gr, da, db, R):
    eg = pair_closed_nearzone(pair(wa, wb, gr, da, db, EXCITED, GROUND), R)
    ge = pair_closed_nearzone(pair(wa, wb, gr, da, db, GROUND, EXCITED), R)
    gg = pair_closed_nearzone(pair(wa, wb, gr, da, db, GROUND, GROUND), R)
    ee = pair_closed_nearzone(pair(wa, wb, gr, da, db, EXCITED, EXCITED), R)
    assert eg.shift + ge.shift == 0.0
    assert ee.shift == -gg.shift and gg.shift < 0
    assert eg.half_width >= 0 and gg.half_width >= 0
    assert pair_closed_nearzone(pair(wa, wb, gr, da, db, EXCITED, GROUND), 2 * R).shift == (
        eg.shift / 64)


@settings(max_examples=40, deadline=None)
@given(wa=freq, ratio=st.floats(0.5, 1.5), gr=width_ratio, sa=state, sb=state, R=dist)
def test_quadrature_agrees_with_closed_form(wa, ratio, gr, sa, sb, R):
    c = pair(wa, wa * ratio, gr, 1.0, 1.0, sa, sb)
    q, k = pair_quadrature_nearzone(c, R), pair_closed_nearzone(c, R)
    assert abs(q.complex - k.complex) <= 1e-5 * abs(k.complex)
    assert q.half_width >= -1e-12


@settings(max_examples=40, deadline=None)
@given(wa=freq, wb=freq, gr=width_ratio, ng=density, ne=density, sa=state,
       z0=st.floats(0.2, 5.0))
def test_surface_spectral_agrees(wa, wb, gr, ng, ne, sa, z0):
    assume(ng + ne > 0.01)
    p = SurfaceProblem(TwoLevelAtom(wa), sa, MediumState(TwoLevelAtom(wb, gr * wb), ng, ne), z0)
    k = surface_potential_qed(p)
    assume(abs(k) > 1e-12)
    assert abs(surface_potential_spectral(p) - k) <= 1e-5 * abs(k)


@settings(max_examples=200, deadline=None)
@given(wa=freq, wb=freq, gr=st.floats(0.0, 0.2), T=st.floats(0.01, 100.0),
       na=st.floats(0.1, 5), nb=st.floats(0.1, 5), L=st.floats(0.1, 10))
def test_thermal_is_composition(wa, wb, gr, T, na, nb, L):
    a, b = TwoLevelAtom(wa), TwoLevelAtom(wb, gr * wb)
    assume(not (wa == wb and gr == 0))
    f = media_force_thermal(a, b, na, nb, T, L)
    g = media_force(SlabProblem(boltzmann_populations(a, na, T), boltzmann_populations(b, nb, T),
                                L))
    assert math.isclose(f.qed, g.qed, rel_tol=1e-11, abs_tol=1e-14 * abs(g.qed) + 1e-300)
    assert math.isclose(f.lifshitz, g.lifshitz, rel_tol=1e-11, abs_tol=1e-300)


@settings(max_examples=200, deadline=None)
@given(wa=freq, wb=freq, gr=width_ratio, nga=density, nea=density, ngb=density,
       neb=density, L=st.floats(0.1, 10))
def test_media_force_is_pair_sum(wa, wb, gr, nga, nea, ngb, neb, L):
    assume(nga + nea > 0.01 and ngb + neb > 0.01)
    p = SlabProblem(MediumState(TwoLevelAtom(wa), nga, nea),
                    MediumState(TwoLevelAtom(wb, gr * wb), ngb, neb), L)
    f = media_force(p)
    scale = (math.pi / 9) * (nga + nea) * (ngb + neb) * 1e3 / L**3
    assert abs(media_force_pairwise(p) - f.qed) <= 1e-12 * scale
    if nea == 0 and neb == 0:
        assert f.qed == f.lifshitz
