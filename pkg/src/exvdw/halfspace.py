"""Atom near the planar surface of a semi-infinite dilute gas (near zone)."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import EXCITED, GROUND, AtomState, PairConfiguration, check_positive
from .errors import NotApplicable, PoleOnAxis
from .pair import pair_closed_nearzone
from .quadrature import CUTOFF_FACTOR, RTOL, contour_integral, resonance_contour
from .response import COHERENT, pole_expansion, susceptibility_poles

#: integral of 1/R**6 over a half space whose face is a distance 1 away
HALFSPACE_FACTOR = math.pi / 6.0

EXTRAPOLATED = "extrapolated-beyond-printed-formulas"


@dataclass(frozen=True)
class SurfaceProblem:
    probe: object
    probe_state: AtomState
    medium: object
    z0: float

    def __post_init__(self):
        object.__setattr__(self, "probe_state", AtomState.parse(self.probe_state))
        object.__setattr__(self, "z0", check_positive("z0", self.z0))


def surface_potential_qed(p):
    """Pairwise-summed potential of the probe in front of the gas.

    Each population of the medium contributes its near-zone pair
    coefficient times its density times the half-space factor
    ``pi / (6 z0**3)``.  Covers the excited probe against a cold gas, the
    ground probe against a cold or partly excited gas, and (flagged by
    :func:`surface_flags`) the excited probe against an excited gas.
    """
    total = 0.0
    geometric = HALFSPACE_FACTOR / p.z0**3
    for state, n in p.medium.populations:
        if n:
            cfg = PairConfiguration(p.probe, p.probe_state, p.medium.species, state)
            total += n * geometric * pair_closed_nearzone(cfg, 1.0).shift
    return total


def surface_flags(p):
    flags = []
    if p.probe_state is EXCITED and p.medium.n_e > 0:
        flags.append(EXTRAPOLATED)
    for state, n in p.medium.populations:
        if n:
            cfg = PairConfiguration(p.probe, p.probe_state, p.medium.species, state)
            flags.extend(pair_closed_nearzone(cfg, 1.0).flags)
    return tuple(dict.fromkeys(flags))


def surface_potential_spectral(p, *, rtol=RTOL):
    """Potential from the frequency integral of probe response times ``eps - 1``.

    Uses the coherent permittivity of the gas and the coherent
    polarizability of the probe; no closed form is involved.
    """
    if p.medium.species.gamma <= 0:
        raise PoleOnAxis("spectral surface potential needs a finite medium linewidth")
    pa, ra = pole_expansion(p.probe, p.probe_state, COHERENT, width=0.0)
    pb, rb = susceptibility_poles(p.medium, COHERENT)
    freqs = (p.probe.omega, p.medium.species.omega)
    path = resonance_contour(p.probe_state.sign, freqs, p.medium.species.gamma,
                             CUTOFF_FACTOR * max(freqs))
    rep = contour_integral(path, pa, ra, pb, rb, rtol=rtol)
    return float((1j / (16.0 * math.pi * p.z0**3) * rep.value).real)


def surface_potential_lifshitz(p):
    """Excited probe vs. cold gas as implied by the dilute Lifshitz force.

    Non-resonant and repulsive for every detuning.

    Raises
    ------
    NotApplicable
        Probe not excited, gas not cold, or gas linewidth >= its frequency.
    """
    if p.probe_state is not EXCITED:
        raise NotApplicable("Lifshitz single-atom potential is for an excited probe")
    if p.medium.n_e > 0:
        raise NotApplicable("Lifshitz single-atom potential is for a cold medium (n_e = 0)")
    sp = p.medium.species
    if sp.gamma >= sp.omega:
        raise NotApplicable("narrow-line formula needs gamma < omega")
    s = p.probe.omega + sp.omega
    hg = 0.5 * sp.gamma
    return (math.pi / (9.0 * p.z0**3) * p.probe.d2 * sp.d2 * s * p.medium.n_g
            / (s * s + hg * hg))


def ground_probe_lifshitz_analog(p):
    """Lifshitz-kernel potential of a ground probe near a cold gas (attractive)."""
    if p.probe_state is not GROUND or p.medium.n_e > 0:
        raise NotApplicable("defined for a ground probe and a cold medium")
    excited = SurfaceProblem(p.probe, EXCITED, p.medium, p.z0)
    return -surface_potential_lifshitz(excited)


__all__ = [
    "SurfaceProblem", "HALFSPACE_FACTOR", "surface_potential_qed", "surface_potential_spectral",
    "surface_potential_lifshitz", "surface_flags", "ground_probe_lifshitz_analog",
]
