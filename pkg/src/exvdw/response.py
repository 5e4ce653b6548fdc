"""Orientation-averaged polarizabilities and dilute-gas permittivities.

Each response of a two-level atom is a sum of two partial fractions,

    alpha(w) = (d2/3) * [1/D1(w) + 1/D2(w)],

with the denominators selected by the level the atom sits in and by the kind
of response.  The coherent and conventional kinds share ``D1`` and differ
only in the sign of ``i*gamma/2`` in ``D2``: the conventional response has
both poles in the lower half plane, the coherent one has one pole in each
half plane.
"""

from __future__ import annotations

import enum
import math

import numpy as np

from .core import EXCITED, GROUND, AtomState
from .errors import CoherentOnImaginaryAxis, PoleOnAxis


class Kind(enum.Enum):
    COHERENT = "coherent"
    CONVENTIONAL = "conventional"


COHERENT = Kind.COHERENT
CONVENTIONAL = Kind.CONVENTIONAL


def _denominators(atom, state, kind, omega):
    w0 = atom.omega
    hg = 0.5j * atom.gamma
    s = 1.0 if kind is COHERENT else -1.0
    if state is GROUND:
        return w0 - omega - hg, w0 + omega - s * hg
    return -w0 - omega - hg, -w0 + omega - s * hg


def polarizability(atom, state, kind, omega):
    """Scalar polarizability of ``atom`` in ``state`` at frequency ``omega``.

    ``omega`` may be a float, a complex number or an array of either.

    Raises
    ------
    PoleOnAxis
        ``gamma == 0`` and ``omega`` hits a transition frequency exactly.
    """
    state = AtomState.parse(state)
    d1, d2 = _denominators(atom, state, Kind(kind), omega)
    if np.any(d1 == 0) or np.any(d2 == 0):
        raise PoleOnAxis(f"omega = +/-{atom.omega} is a pole of the undamped response")
    value = (atom.d2 / 3.0) * (1.0 / d1 + 1.0 / d2)
    if np.ndim(value) == 0:
        return complex(value)
    return value


def pole_expansion(atom, state, kind, *, width=None):
    """Poles and residues with ``alpha(w) = sum(r / (w - p))``.

    ``width`` overrides ``atom.gamma``; pass 0.0 for a probe whose own width
    is neglected.
    """
    state = AtomState.parse(state)
    kind = Kind(kind)
    w0 = atom.omega
    g = 0.5 * (atom.gamma if width is None else width)
    c = atom.d2 / 3.0
    s = 1.0 if kind is COHERENT else -1.0
    if state is GROUND:
        poles = (complex(w0, -g), complex(-w0, s * g))
        res = (-c, c)
    else:
        poles = (complex(-w0, -g), complex(w0, s * g))
        res = (-c, c)
    return np.array(poles), np.array(res, dtype=complex)


def permittivity(medium, kind, omega):
    """Dilute-gas permittivity ``1 + 4 pi (n_e alpha_e + n_g alpha_g)``."""
    kind = Kind(kind)
    chi = 0.0
    for state, n in medium.populations:
        if n:
            chi = chi + n * polarizability(medium.species, state, kind, omega)
    value = 1.0 + 4.0 * math.pi * chi
    if np.ndim(value) == 0:
        return complex(value)
    return value


def susceptibility_poles(medium, kind, *, width=None):
    """Pole expansion of ``epsilon - 1`` for ``medium``."""
    poles, res = [], []
    for state, n in medium.populations:
        if n:
            p, r = pole_expansion(medium.species, state, kind, width=width)
            poles.append(p)
            res.append(4.0 * math.pi * n * r)
    return np.concatenate(poles), np.concatenate(res)


def ground_polarizability_imag_axis(atom, u):
    """Conventional ground-state polarizability at ``omega = i u`` (real)."""
    w0 = atom.omega
    g = 0.5 * atom.gamma
    return (atom.d2 / 3.0) * 2.0 * w0 / (w0 * w0 + (u + g) ** 2)


def susceptibility_imag_axis(medium, u, *, width=None):
    """``epsilon(iu) - 1`` of the conventional permittivity, computed directly.

    ``width`` overrides the species linewidth (0.0 for a species whose width
    is neglected).  ``u = inf`` gives 0.
    """
    atom = medium.species
    g = 0.5 * (atom.gamma if width is None else width)
    u = np.asarray(u, dtype=float)
    finite = np.isfinite(u)
    uf = np.where(finite, u, 0.0)
    alpha = (atom.d2 / 3.0) * 2.0 * atom.omega / (atom.omega**2 + (uf + g) ** 2)
    value = np.where(finite, 4.0 * math.pi * (medium.n_g - medium.n_e) * alpha, 0.0)
    if value.ndim == 0:
        return float(value)
    return value


def permittivity_imag_axis(medium, kind, u):
    """Conventional permittivity at imaginary frequency ``i u``.

    On the imaginary axis the excited-state response is exactly minus the
    ground-state one, so ``epsilon(iu) - 1`` is proportional to
    ``n_g - n_e``.  The coherent kind is refused: it is not analytic in the
    upper half plane and has no continuation there.
    """
    if Kind(kind) is COHERENT:
        raise CoherentOnImaginaryAxis("coherent permittivity is undefined at imaginary frequency")
    if np.any(np.asarray(u) < 0):
        raise ValueError("u must be >= 0")
    return 1.0 + susceptibility_imag_axis(medium, u)


__all__ = [
    "Kind", "COHERENT", "CONVENTIONAL", "EXCITED", "GROUND",
    "polarizability", "pole_expansion", "permittivity", "permittivity_imag_axis",
    "susceptibility_poles", "susceptibility_imag_axis", "ground_polarizability_imag_axis",
]
