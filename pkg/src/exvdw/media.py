"""Force per unit area between two dilute gases across a gap of width L.

Two answers are computed side by side: the pairwise QED sum, which depends
on the populations through the coherent permittivities, and the dilute
Lifshitz formula, which only sees ``n_g - n_e``.  Forces follow the sign
convention in which two cold gases give a positive value (attraction).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import MediumState, PairConfiguration, check_positive
from .errors import NonPositiveDensity, NonPositiveTemperature, NotApplicable, PoleOnAxis
from .pair import pair_closed_nearzone
from .quadrature import CUTOFF_FACTOR, RTOL, contour_integral, quad_adaptive, resonance_contour
from .response import COHERENT, pole_expansion, susceptibility_imag_axis, susceptibility_poles

#: imaginary-frequency cutoff as a multiple of the largest transition frequency
IMAG_CUTOFF_FACTOR = 1.0e3


@dataclass(frozen=True)
class SlabProblem:
    medium_a: MediumState
    medium_b: MediumState
    L: float

    def __post_init__(self):
        object.__setattr__(self, "L", check_positive("L", self.L))


@dataclass(frozen=True)
class ForcePair:
    qed: float
    lifshitz: float
    flags: tuple = ()


def boltzmann_populations(species, n_total, T):
    """Thermal level populations with ``n_e = n_g exp(-omega/T)``."""
    n_total = float(n_total)
    T = float(T)
    if not (math.isfinite(T) and T > 0):
        raise NonPositiveTemperature("T", f"must be > 0, got {T!r}")
    if not (math.isfinite(n_total) and n_total > 0):
        raise NonPositiveDensity("n_total", f"must be > 0, got {n_total!r}")
    n_g = n_total / (1.0 + math.exp(-species.omega / T))
    return MediumState(species, n_g, n_total - n_g)


def _lorentz(x, hg):
    """``x / (x^2 + hg^2)``, or ``None`` when the denominator vanishes."""
    den = x * x + hg * hg
    return x / den if den else None


def _check_narrow(*species):
    for sp in species:
        if sp.gamma >= sp.omega:
            raise NotApplicable("narrow-line closed form needs gamma < omega")


def media_force(p):
    """Closed-form QED and Lifshitz forces per unit area.

    The widths of medium A are neglected; gamma of medium B sets every
    Lorentzian.
    """
    a, b = p.medium_a, p.medium_b
    _check_narrow(a.species, b.species)
    wa, wb = a.species.omega, b.species.omega
    hg = 0.5 * b.species.gamma
    pref = math.pi / (9.0 * p.L**3) * a.species.d2 * b.species.d2
    s_plus = _lorentz(wa + wb, hg)
    s_minus = _lorentz(wa - wb, hg)
    flags = ()
    if s_minus is None:
        s_minus = 0.0
        flags = ("degenerate-resonance",)
    qed = pref * (a.n_g * b.n_g * s_plus
                  - (a.n_e * b.n_g - a.n_g * b.n_e) * s_minus
                  - a.n_e * b.n_e * s_plus)
    # same grouping as the QED bracket, so cold gases agree bit for bit
    lifshitz = pref * ((a.n_g - a.n_e) * (b.n_g - b.n_e) * s_plus)
    return ForcePair(qed, lifshitz, flags)


def media_force_pairwise(p):
    """QED force rebuilt from the four pair coefficients (GG, EG, GE, EE).

    Independent of :func:`media_force`: each pair of populations contributes
    ``-(pi / 6) * n_a * n_b * K / L**3`` where ``K`` is the near-zone pair
    coefficient of ``U = K / R**6``.
    """
    total = 0.0
    for sa, na in p.medium_a.populations:
        for sb, nb in p.medium_b.populations:
            if na and nb:
                cfg = PairConfiguration(p.medium_a.species, sa, p.medium_b.species, sb)
                k = pair_closed_nearzone(cfg, 1.0).shift
                total += na * nb * (math.pi / 12.0) * k
    return -2.0 * total / p.L**3


def media_force_thermal(species_a, species_b, n_a, n_b, T, L):
    """QED and Lifshitz forces between two gases in thermal equilibrium.

    Evaluated from the thermal closed forms directly rather than by composing
    :func:`boltzmann_populations` with :func:`media_force`; the two routes
    agree to rounding.
    """
    T = float(T)
    if not (math.isfinite(T) and T > 0):
        raise NonPositiveTemperature("T", f"must be > 0, got {T!r}")
    for name, n in (("n_a", n_a), ("n_b", n_b)):
        if not n > 0:
            raise NonPositiveDensity(name, f"must be > 0, got {n!r}")
    L = check_positive("L", L)
    _check_narrow(species_a, species_b)
    wa, wb = species_a.omega, species_b.omega
    hg = 0.5 * species_b.gamma
    ea, eb = math.exp(-wa / T), math.exp(-wb / T)
    pref = (math.pi / (9.0 * L**3) * species_a.d2 * species_b.d2 * n_a * n_b
            / ((1.0 + ea) * (1.0 + eb)))
    s_plus = _lorentz(wa + wb, hg)
    s_minus = _lorentz(wa - wb, hg)
    flags = ()
    if s_minus is None:
        s_minus = 0.0
        flags = ("degenerate-resonance",)
    qed = pref * ((1.0 - ea * eb) * s_plus - (ea - eb) * s_minus)
    lifshitz = pref * (1.0 - ea) * (1.0 - eb) * s_plus
    return ForcePair(qed, lifshitz, flags)


def media_force_lifshitz_quadrature(p, *, rtol=1e-12):
    """Dilute Lifshitz force from its imaginary-frequency integral.

    ``(1 / (32 pi^2 L^3)) * int_0^inf (eps_A(iu) - 1)(eps_B(iu) - 1) du``
    with conventional permittivities, medium A's width neglected.  The range
    is cut at ``1e3 * max(omega)`` and the ``1/u**4`` tail added analytically.
    """
    a, b = p.medium_a, p.medium_b

    def integrand(u):
        return susceptibility_imag_axis(a, u, width=0.0) * susceptibility_imag_axis(b, u)

    freqs = (a.species.omega, b.species.omega)
    cutoff = IMAG_CUTOFF_FACTOR * max(freqs)
    rep = quad_adaptive(integrand, 0.0, cutoff, tol=0.0, rtol=rtol, seeds=freqs)
    tail_coef = 1.0
    for m in (a, b):
        tail_coef *= 4.0 * math.pi * (m.n_g - m.n_e) * (m.species.d2 / 3.0) * 2.0 * m.species.omega
    total = rep.value.real + tail_coef / (3.0 * cutoff**3)
    return total / (32.0 * math.pi**2 * p.L**3)


def media_potential_per_area(p, *, rtol=RTOL):
    """Interaction energy per unit area from the coherent-permittivity integral.

    ``u(L) = Re[i / (128 pi^2 L^2) * int (eps_A - 1)(eps_B - 1) domega]``,
    so that the force is ``dF = du/dL``.  The product is split by the
    population of gas A, since its two levels put poles on opposite sides of
    the real axis at the same frequency.
    """
    a, b = p.medium_a, p.medium_b
    if b.species.gamma <= 0:
        raise PoleOnAxis("spectral media potential needs gamma_B > 0")
    pb, rb = susceptibility_poles(b, COHERENT)
    freqs = (a.species.omega, b.species.omega)
    total = 0.0
    for state, n in a.populations:
        if not n:
            continue
        pa, ra = pole_expansion(a.species, state, COHERENT, width=0.0)
        path = resonance_contour(state.sign, freqs, b.species.gamma, CUTOFF_FACTOR * max(freqs))
        total += contour_integral(path, pa, 4.0 * math.pi * n * ra, pb, rb, rtol=rtol).value
    return float((1j * total).real / (128.0 * math.pi**2 * p.L**2))


def media_potential_closed(p):
    """``u(L) = -F(L) L / 2`` from the closed-form QED force."""
    return -0.5 * media_force(p).qed * p.L


__all__ = [
    "SlabProblem", "ForcePair", "boltzmann_populations", "media_force", "media_force_pairwise",
    "media_force_thermal", "media_force_lifshitz_quadrature", "media_potential_per_area",
    "media_potential_closed",
]
