"""Free-space photon propagator between two dipoles, frequency domain."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ZeroSeparation


@dataclass(frozen=True)
class DyadicKernel:
    m: np.ndarray
    omega: float
    r: tuple


def _transverse_longitudinal(k, r):
    """Diagonal components for separation along z, with ``k = |omega|``.

    Written as polynomials in ``k`` so ``k = 0`` (and complex ``k`` on a
    deformed contour) needs no special casing.
    """
    phase = np.exp(1j * k * r) / r
    trans = (k * k + 1j * k / r - 1.0 / (r * r)) * phase
    longi = (2.0 / (r * r) - 2j * k / r) * phase
    return trans, longi


def dyadic(omega, r, conjugate=False):
    """Propagator tensor ``D^{vv'}(omega, r)``.

    Depends on ``omega`` only through ``|omega|``, so it is even in
    frequency.  ``conjugate=True`` returns the anti-time-ordered partner,
    the elementwise complex conjugate.
    """
    vec = np.asarray(r, dtype=float).reshape(3)
    dist = float(np.linalg.norm(vec))
    if dist == 0.0:
        raise ZeroSeparation("r")
    k = abs(float(omega))
    rhat = vec / dist
    trans, longi = _transverse_longitudinal(k, dist)
    # longi = trans + radial term
    m = trans * np.eye(3) + (longi - trans) * np.outer(rhat, rhat)
    if conjugate:
        m = m.conj()
    return DyadicKernel(m=m, omega=float(omega), r=tuple(vec))


def trace_squared(k, r):
    """``sum_{vv'} D^{vv'}(k, R) D^{v'v}(k, -R)`` for scalar separation ``r``.

    ``k`` may be complex (analytic continuation of ``|omega|``).
    """
    trans, longi = _transverse_longitudinal(k, r)
    return 2.0 * trans * trans + longi * longi


def contracted_pair_kernel(omega, R):
    """Trace contraction of two propagators divided by the two 1/3 factors.

    Tends to ``(2/3)/R**6`` as ``omega -> 0``.
    """
    R = float(R)
    if not R > 0:
        raise ZeroSeparation("R")
    m_ab = dyadic(omega, (0.0, 0.0, R)).m
    m_ba = dyadic(omega, (0.0, 0.0, -R)).m
    return complex(np.trace(m_ab @ m_ba)) / 9.0
