"""Brute-force verifiers that establish the derived constants independently.

Nothing here calls a closed form to produce an expected value: geometric
factors come from nested numerical integration, pair and surface results
from frequency quadrature, and thermal figure values from arithmetic written
out separately from :mod:`exvdw.media`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import EXCITED, GROUND, MediumState, PairConfiguration, TwoLevelAtom, check_positive
from .halfspace import SurfaceProblem, surface_potential_qed, surface_potential_spectral
from .media import (
    SlabProblem, boltzmann_populations, media_force, media_force_lifshitz_quadrature,
    media_force_thermal, media_potential_per_area,
)
from .pair import pair_closed_nearzone, pair_quadrature_nearzone
from .propagator import contracted_pair_kernel, dyadic
from .quadrature import QuadratureReport, quad_adaptive
from .response import COHERENT, CONVENTIONAL, permittivity, polarizability

#: canonical test parameters: omega_A, omega_B, gamma_B, d2
CANONICAL = (1.0, 0.9, 0.02, 1.0)


@dataclass(frozen=True)
class PairCheck:
    closed: complex
    quadrature: complex
    gap: float
    tol: float

    @property
    def passed(self):
        return self.gap <= self.tol


@dataclass(frozen=True)
class Check:
    name: str
    computed: float
    expected: float
    gap: float
    tol: float

    @property
    def passed(self):
        return bool(self.gap <= self.tol)


def relative_gap(x, ref):
    x, ref = complex(x), complex(ref)
    if ref == 0:
        return abs(x)
    return abs(x - ref) / abs(ref)


def halfspace_factor_cubature(z0, tol=1e-8):
    """``int dV / R**6`` over the half space ``z > z0`` by nested quadrature.

    Inner integral over the cylindrical radius, outer over depth, both
    numeric and both extended to infinity.
    """
    z0 = check_positive("z0", z0)

    def inner(z):
        def radial(rho):
            return 2.0 * math.pi * rho / (z * z + rho * rho) ** 3
        return quad_adaptive(radial, 0.0, math.inf, tol=0.0, rtol=0.1 * tol,
                             seeds=(z,)).value.real

    def outer(zs):
        return np.array([inner(z) for z in zs])

    return quad_adaptive(outer, z0, math.inf, tol=0.0, rtol=tol).value.real


def slab_factor(L):
    """``int_L^inf dz / z**3``."""
    L = check_positive("L", L)
    return 1.0 / (2.0 * L * L)


def prefactor_chain(L=1.0):
    """Media prefactor rebuilt from the surface one: (1/16pi)(1/4pi)(1/2L^2)."""
    return (1.0 / (16.0 * math.pi)) * (1.0 / (4.0 * math.pi)) * slab_factor(L)


def verify_pair_closed(cfg, R, tol=1e-5):
    """Compare the near-zone closed form against frequency quadrature."""
    closed = pair_closed_nearzone(cfg, R).complex
    quad = pair_quadrature_nearzone(cfg, R).complex
    return PairCheck(closed, quad, relative_gap(quad, closed), tol)


def thermal_figure_values(ratio, T, gamma_ratio, omega_b=1.0):
    """Normalized thermal QED and Lifshitz forces written out term by term.

    Returns ``(qed, lifshitz)`` divided by ``(pi/9) d2_A d2_B n_A n_B / L**3``.
    """
    wa, wb = ratio * omega_b, omega_b
    g2 = (0.5 * gamma_ratio * omega_b) ** 2
    xa, xb = math.exp(-wa / T), math.exp(-wb / T)
    ng_a, ne_a = 1.0 / (1.0 + xa), xa / (1.0 + xa)
    ng_b, ne_b = 1.0 / (1.0 + xb), xb / (1.0 + xb)
    s_plus = (wa + wb) / ((wa + wb) ** 2 + g2)
    s_minus = (wa - wb) / ((wa - wb) ** 2 + g2)
    qed = ng_a * ng_b * s_plus - (ne_a * ng_b - ng_a * ne_b) * s_minus - ne_a * ne_b * s_plus
    lif = (ng_a - ne_a) * (ng_b - ne_b) * s_plus
    return qed, lif


def _canonical_pair(sa, sb):
    wa, wb, g, d2 = CANONICAL
    return PairConfiguration(TwoLevelAtom(wa, 0.0, d2), sa, TwoLevelAtom(wb, g, d2), sb)


def provenance_checks():
    """Every derived constant recomputed independently, as :class:`Check` rows."""
    rows = []

    def add(name, computed, expected, tol, absolute=False):
        gap = abs(computed - expected) if absolute else relative_gap(computed, expected)
        rows.append(Check(name, float(np.real(computed)), float(np.real(expected)), gap, tol))

    rep = quad_adaptive(lambda u: 1.0 / (1.0 + u * u) ** 2, 0.0, 1e6, tol=1e-10)
    add("quad 1/(1+u^2)^2 on [0,1e6]", rep.value.real, math.pi / 4 - 1.0 / 3e18, 1e-10,
        absolute=True)

    for z0 in (1.0, 2.0):
        add(f"half-space factor z0={z0:g}", halfspace_factor_cubature(z0),
            math.pi / (6.0 * z0**3), 1e-6)
    add("slab factor L=2", slab_factor(2.0), 0.125, 0.0, absolute=True)
    add("media prefactor chain", prefactor_chain(), 1.0 / (128.0 * math.pi**2), 1e-15)

    atom = TwoLevelAtom(1.0, 0.02, 1.0)
    add("alpha_g coherent(0)", polarizability(atom, GROUND, COHERENT, 0.0),
        (2.0 / 3.0) / (1.0 - 0.01j), 1e-14)
    add("alpha_e coherent(0)", polarizability(atom, EXCITED, COHERENT, 0.0),
        (2.0 / 3.0) / (-1.0 - 0.01j), 1e-14)
    add("eps coherent(0)", permittivity(MediumState(atom, 1.0), COHERENT, 0.0),
        1.0 + 4.0 * math.pi * (2.0 / 3.0) / (1.0 - 0.01j), 1e-14)
    add("eps conventional(0), n_g=n_e, gamma=0",
        permittivity(MediumState(TwoLevelAtom(1.0), 0.5, 0.5), CONVENTIONAL, 0.0), 1.0,
        1e-15, absolute=True)

    m = dyadic(1.0, (0.0, 0.0, 1.0)).m
    phase = complex(math.cos(1.0), math.sin(1.0))
    add("dyadic xx (omega=1, r=1)", m[0, 0], (1.0 + 1j - 1.0) * phase, 1e-14)
    add("dyadic zz (omega=1, r=1)", m[2, 2], (2.0 - 2j) * phase, 1e-14)
    add("static pair kernel", contracted_pair_kernel(1e-6, 1.0), 2.0 / 3.0, 1e-5)

    wa, wb, g, d2 = CANONICAL
    for sa, sb, label in ((EXCITED, GROUND, "EG"), (GROUND, GROUND, "GG"),
                          (EXCITED, EXCITED, "EE"), (GROUND, EXCITED, "GE")):
        chk = verify_pair_closed(_canonical_pair(sa, sb), 1.0)
        rows.append(Check(f"pair {label} closed vs quadrature", abs(chk.closed),
                          abs(chk.quadrature), chk.gap, 1e-5))
    eg = pair_quadrature_nearzone(_canonical_pair(EXCITED, GROUND), 1.0)
    add("pair EG shift", eg.shift, (2.0 / 3.0) * 0.1 / 0.0101, 1e-5)
    add("pair EG half-width", eg.half_width, (2.0 / 3.0) * 0.01 / 0.0101, 1e-5)
    gg = pair_quadrature_nearzone(_canonical_pair(GROUND, GROUND), 1.0)
    add("pair GG shift", gg.shift, -(2.0 / 3.0) * 1.9 / 3.6101, 1e-5)

    probe = TwoLevelAtom(wa, 0.0, d2)
    species = TwoLevelAtom(wb, g, d2)
    cold = MediumState(species, 1.0, 0.0)
    half = MediumState(species, 0.5, 0.5)
    for state, medium, expected, label in (
        (EXCITED, cold, (math.pi / 9) * 0.1 / 0.0101, "excited probe, cold gas"),
        (GROUND, cold, -(math.pi / 9) * 1.9 / 3.6101, "ground probe, cold gas"),
        (GROUND, half, (math.pi / 9) * (0.5 * -0.1 / 0.0101 - 0.5 * 1.9 / 3.6101),
         "ground probe, half-excited gas"),
    ):
        p = SurfaceProblem(probe, state, medium, 1.0)
        spectral = surface_potential_spectral(p)
        add(f"surface {label} (spectral)", spectral, expected, 1e-5)
        add(f"surface {label} (pairwise vs spectral)", surface_potential_qed(p), spectral, 1e-5)

    pop = boltzmann_populations(TwoLevelAtom(1.0), 1.0, 0.5)
    add("Boltzmann n_g (omega=1, T=0.5)", pop.n_g, 1.0 / (1.0 + math.exp(-2.0)), 1e-15)

    ident = MediumState(TwoLevelAtom(1.0), 1.0)
    add("Lifshitz quadrature, identical cold gases",
        media_force_lifshitz_quadrature(SlabProblem(ident, ident, 1.0)), math.pi / 18, 1e-8,
        absolute=True)

    qed5, lif5 = thermal_figure_values(0.9, 0.3, 0.02)
    a, b = TwoLevelAtom(0.9, 0.0, 1.0), TwoLevelAtom(1.0, 0.02, 1.0)
    thermal = media_force_thermal(a, b, 1.0, 1.0, 0.3, 1.0)
    add("thermal QED (ratio 0.9, T=0.3)", thermal.qed / (math.pi / 9), qed5, 1e-12)
    add("thermal Lifshitz (ratio 0.9, T=0.3)", thermal.lifshitz / (math.pi / 9), lif5, 1e-12)
    composed = media_force(SlabProblem(boltzmann_populations(a, 1.0, 0.3),
                                       boltzmann_populations(b, 1.0, 0.3), 1.0))
    add("thermal QED vs composed populations", composed.qed, thermal.qed, 1e-13)

    slab = SlabProblem(MediumState(probe, 1.0), cold, 1.0)
    h = 1e-5
    du = (media_potential_per_area(SlabProblem(slab.medium_a, slab.medium_b, 1.0 + h))
          - media_potential_per_area(SlabProblem(slab.medium_a, slab.medium_b, 1.0 - h))) / (2 * h)
    add("du/dL vs force (cold gases)", du, (math.pi / 9) * 1.9 / 3.6101, 1e-6)
    return rows


__all__ = [
    "QuadratureReport", "quad_adaptive", "halfspace_factor_cubature", "slab_factor",
    "prefactor_chain", "verify_pair_closed", "thermal_figure_values", "provenance_checks",
    "PairCheck", "Check", "relative_gap", "CANONICAL",
]
