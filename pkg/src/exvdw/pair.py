"""Dispersion interaction of two two-level atoms.

The level shift of atom A and its induced half-width come from one complex
number, ``M = shift - i * half_width``.  In the near zone every state
combination reduces to

    M = (2 / (3 R**6)) * d2_A * d2_B / (X + i gamma_B/2),

with ``X = s_A omega_A + s_B omega_B`` and ``s = +1`` (excited) or ``-1``
(ground).  The probe's own width is neglected, so only gamma_B appears.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import PoleOnAxis, RegulatorTooLarge, ZeroSeparation
from .quadrature import CUTOFF_FACTOR, RTOL, contour_integral, resonance_contour
from .response import COHERENT, pole_expansion

#: R * max(omega) below which the retarded kernel is checked against the near zone
NEAR_ZONE_LIMIT = 1e-2


@dataclass(frozen=True)
class ShiftWidth:
    shift: float
    half_width: float
    flags: tuple = ()
    error: float | None = None

    @property
    def complex(self):
        return complex(self.shift, -self.half_width)


def _check_separation(R):
    R = float(R)
    if not (math.isfinite(R) and R > 0):
        raise ZeroSeparation("R")
    return R


def detuning_variable(cfg):
    """``X = s_A omega_A + s_B omega_B`` for the configuration's states."""
    return cfg.state_a.sign * cfg.atom_a.omega + cfg.state_b.sign * cfg.atom_b.omega


def pair_closed_nearzone(cfg, R):
    """Near-zone shift and half-width in closed form.

    EG and GE give the resonant ``(omega_A - omega_B)`` law whose sign
    follows the detuning; GG is the damped London attraction and EE its
    mirror image.  With ``gamma_B = 0`` at exact resonance the result is
    0/0; the continuous limit 0 is returned and flagged.
    """
    R = _check_separation(R)
    x = detuning_variable(cfg)
    hg = 0.5 * cfg.atom_b.gamma
    den = x * x + hg * hg
    if den == 0.0:
        return ShiftWidth(0.0, 0.0, ("degenerate-resonance",))
    coef = 2.0 * cfg.atom_a.d2 * cfg.atom_b.d2 / (3.0 * R**6)
    return ShiftWidth(coef * x / den, coef * hg / den)


def _pair_poles(cfg):
    probe = pole_expansion(cfg.atom_a, cfg.state_a, COHERENT, width=0.0)
    partner = pole_expansion(cfg.atom_b, cfg.state_b, COHERENT)
    return probe, partner


def pair_quadrature_nearzone(cfg, R, *, rtol=RTOL):
    """Near-zone shift and half-width by direct frequency integration.

    Integrates the product of the two coherent polarizabilities over the
    whole frequency axis (cut off at ``1e4 * max(omega)``, analytic
    ``1/omega**4`` tails appended) with no use of the closed form.

    Raises
    ------
    PoleOnAxis
        ``gamma_B == 0``: the partner's poles sit on the integration path.
    QuadratureNonConvergent
        Tolerance not reached within the subdivision budget.
    """
    R = _check_separation(R)
    if cfg.atom_b.gamma <= 0:
        raise PoleOnAxis("near-zone quadrature needs gamma_B > 0")
    (pa, ra), (pb, rb) = _pair_poles(cfg)
    freqs = (cfg.atom_a.omega, cfg.atom_b.omega)
    path = resonance_contour(cfg.state_a.sign, freqs, cfg.atom_b.gamma,
                             CUTOFF_FACTOR * max(freqs))
    rep = contour_integral(path, pa, ra, pb, rb, rtol=rtol)
    m = 3j / (2.0 * math.pi * R**6) * rep.value
    scale = 3.0 / (2.0 * math.pi * R**6)
    return ShiftWidth(m.real, -m.imag, error=scale * rep.abs_error_estimate)


def pair_spectral_general(cfg, R, eta, *, rtol=RTOL, limit=20000):
    """Shift and half-width at arbitrary separation with a frequency regulator.

    The full propagator product oscillates without decaying at large
    frequency, so the integrand is damped by ``exp(-eta |omega|)``.  The
    physical value is the ``eta -> 0`` limit; see
    :func:`pair_spectral_extrapolated`.  Outside the near zone the result is
    flagged ``unvalidated-far-zone``: there is no closed form to check it
    against.
    """
    R = _check_separation(R)
    eta = float(eta)
    freqs = (cfg.atom_a.omega, cfg.atom_b.omega)
    if not eta > 0:
        raise ValueError("eta must be > 0")
    if eta > 0.1 * min(freqs):
        raise RegulatorTooLarge("eta", f"{eta} > 0.1 * min(omega_A, omega_B)")
    if cfg.atom_b.gamma <= 0:
        raise PoleOnAxis("spectral quadrature needs gamma_B > 0")
    (pa, ra), (pb, rb) = _pair_poles(cfg)
    cutoff = max(CUTOFF_FACTOR * max(freqs), 50.0 / eta)
    path = resonance_contour(cfg.state_a.sign, freqs, cfg.atom_b.gamma, cutoff)
    rep = contour_integral(path, pa, ra, pb, rb, mode=1, sep=R, eta=eta, rtol=rtol,
                           limit=limit)
    m = 1j / (4.0 * math.pi) * rep.value
    flags = () if R * max(freqs) <= NEAR_ZONE_LIMIT else ("unvalidated-far-zone",)
    return ShiftWidth(m.real, -m.imag, flags, rep.abs_error_estimate / (4.0 * math.pi))


def richardson_zero(xs, values):
    """Value at ``x = 0`` of the polynomial through ``(xs[i], values[i])`` (Neville)."""
    xs = [float(x) for x in xs]
    p = [complex(v) for v in values]
    n = len(xs)
    for k in range(1, n):
        for i in range(n - k):
            p[i] = (xs[i + k] * p[i] - xs[i] * p[i + 1]) / (xs[i + k] - xs[i])
    return p[0]


def pair_spectral_extrapolated(cfg, R, etas=None, *, rtol=RTOL):
    """Regulated spectral result extrapolated to ``eta -> 0``.

    ``etas`` defaults to ``(0.1, 0.05, 0.025) * gamma_B``.
    """
    if etas is None:
        etas = tuple(f * cfg.atom_b.gamma for f in (0.1, 0.05, 0.025))
    runs = [pair_spectral_general(cfg, R, eta, rtol=rtol) for eta in etas]
    m = richardson_zero(etas, [r.complex for r in runs])
    flags = tuple(sorted(set().union(*(r.flags for r in runs))))
    return ShiftWidth(m.real, -m.imag, flags)
