"""Adaptive quadrature engine shared by the physics modules and the oracles.

Two entry points:

* :func:`quad_adaptive` integrates an arbitrary vectorized callable over a
  real interval (pure Python, always available).
* :func:`contour_integral` integrates products of two pole sums, optionally
  weighted by the retarded propagator trace, along a polyline in the complex
  frequency plane.  The inner loop runs in the compiled kernel when present.

Both use the 7/15-point Gauss-Kronrod pair with global bisection of the
interval carrying the largest error estimate.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from ._pykernels import NODES, gk15
from .errors import BudgetExhausted, NonFiniteIntegrand, PoleOnAxis

#: default relative tolerance of every physics quadrature
RTOL = 1e-10
#: Frequency cutoff as a multiple of the largest transition frequency.
CUTOFF_FACTOR = 1.0e4


@dataclass(frozen=True)
class QuadratureReport:
    value: complex
    abs_error_estimate: float
    evaluations: int
    converged: bool


def quad_adaptive(f, a, b, tol=1e-10, seeds=(), *, rtol=0.0, limit=2000, strict=True):
    """Integrate ``f`` over ``[a, b]``.

    Parameters
    ----------
    f : callable
        Vectorized integrand, ndarray -> ndarray (real or complex).
    a, b : float
        Bounds; ``b`` may be ``inf``.
    tol : float
        Absolute tolerance; the target is ``max(tol, rtol*|value|)``.
    seeds : iterable of float
        Abscissae forced to be interval endpoints from the start.  Narrow
        features that the initial grid would step over must be seeded.
        Finite intervals longer than 4 are also pre-split geometrically
        toward ``a`` (breakpoints at ``a + (b - a) / 4**k`` down to a
        distance of 1), so structure of unit scale near the lower bound is
        seen by the first pass.
    limit : int
        Maximum number of subintervals.
    strict : bool
        Raise :class:`BudgetExhausted` when the budget runs out instead of
        returning an unconverged report.
    """
    a = float(a)
    b = float(b)
    if not tol > 0 and not rtol > 0:
        raise ValueError("need tol > 0 or rtol > 0")
    if math.isinf(b):
        def g(s, _f=f, _a=a):
            return _f(_a + s / (1.0 - s)) / (1.0 - s) ** 2

        pts = [(x - a) / (1.0 + x - a) for x in seeds if a < x < math.inf]
        lo, hi = 0.0, 1.0
    else:
        g = f
        pts = [float(x) for x in seeds if a < x < b]
        step = 0.25 * (b - a)
        while step >= 1.0 and len(pts) < 64:
            pts.append(a + step)
            step *= 0.25
        lo, hi = a, b
    edges = sorted({lo, hi, *pts})
    neval = 0

    def piece(x0, x1):
        nonlocal neval
        half = 0.5 * (x1 - x0)
        x = 0.5 * (x0 + x1) + half * NODES
        fv = np.asarray(g(x))
        neval += 15
        bad = ~np.isfinite(fv)
        if bad.any():
            raise NonFiniteIntegrand(float(x[np.argmax(bad)]))
        return gk15(fv, half)

    intervals, heap = [], []
    for x0, x1 in zip(edges[:-1], edges[1:]):
        val, err = piece(x0, x1)
        heapq.heappush(heap, (-err, len(intervals)))
        intervals.append((x0, x1, val, err))
    total = sum(iv[2] for iv in intervals)
    errsum = sum(iv[3] for iv in intervals)
    converged = True
    while errsum > max(tol, rtol * abs(total)):
        if len(intervals) >= limit:
            converged = False
            break
        _, idx = heapq.heappop(heap)
        x0, x1, val, err = intervals[idx]
        xm = 0.5 * (x0 + x1)
        if not x0 < xm < x1:
            converged = False
            break
        v1, e1 = piece(x0, xm)
        v2, e2 = piece(xm, x1)
        intervals[idx] = (x0, xm, v1, e1)
        heapq.heappush(heap, (-e1, idx))
        heapq.heappush(heap, (-e2, len(intervals)))
        intervals.append((xm, x1, v2, e2))
        total += v1 + v2 - val
        errsum += e1 + e2 - err
    total = sum(iv[2] for iv in intervals)
    errsum = sum(iv[3] for iv in intervals)
    report = QuadratureReport(complex(total), float(errsum), neval, converged)
    if not converged and strict:
        raise BudgetExhausted(
            f"{len(intervals)} subintervals, error estimate {errsum:.3g} above target", report)
    return report


def resonance_contour(probe_sign, frequencies, width, cutoff):
    """Polyline that threads between the poles of two coherent responses.

    Along the real axis the probe (width neglected) has poles at
    ``+/-omega_A`` just above or below the axis, and the partner or medium
    at ``+/-omega_B +/- i width/2``.  For ``Re z > 0`` the line runs at
    ``Im z = -probe_sign * width/4`` and mirrors it for ``Re z < 0``, which
    leaves every pole on the same side as the real-axis prescription puts
    it.  The two halves join through the origin, so ``|omega|`` can be
    continued analytically as ``+z`` or ``-z`` on each half.

    Parameters
    ----------
    probe_sign : int
        +1 for an excited probe, -1 for a ground-state probe.
    frequencies : sequence of float
        Transition frequencies; used to seed breakpoints.
    width : float
        Partner linewidth gamma_B (> 0).
    cutoff : float
        Real-part extent of the contour.
    """
    if not width > 0:
        raise PoleOnAxis("contour quadrature needs a finite partner width")
    freqs = sorted(set(float(w) for w in frequencies))
    y = -probe_sign * 0.25 * width
    x0 = 0.5 * freqs[0]
    xs = {x0, cutoff}
    for w in freqs:
        for c in (-8.0, -2.0, -0.5, 0.0, 0.5, 2.0, 8.0):
            x = w + c * width
            if x0 < x < cutoff:
                xs.add(x)
    x = 2.0 * freqs[-1]
    while x < cutoff:
        xs.add(x)
        x *= 4.0
    pos = sorted(xs)
    return np.array([complex(-x, -y) for x in reversed(pos)] + [complex(x, y) for x in pos])


def _moments(poles, res, order=3):
    """Coefficients c_n of the 1/z**n expansion, n = 1..order."""
    return [complex(np.sum(res * poles ** (n - 1))) for n in range(1, order + 1)]


def tail_correction(poles_a, res_a, poles_b, res_b, z_start, z_end):
    """Analytic integral of A*B outside the contour, from its 1/z expansion."""
    a = _moments(poles_a, res_a)
    b = _moments(poles_b, res_b)
    coeffs = {
        2: a[0] * b[0],
        3: a[0] * b[1] + a[1] * b[0],
        4: a[0] * b[2] + a[1] * b[1] + a[2] * b[0],
    }
    total = 0.0
    for n, c in coeffs.items():
        if c:
            total += c * (z_end ** (1 - n) - z_start ** (1 - n)) / (n - 1)
    return total


def contour_integral(vertices, poles_a, res_a, poles_b, res_b, *, mode=0, sep=1.0, eta=0.0,
                     rtol=RTOL, atol=0.0, limit=4000, tail=True):
    """Integral of ``w(z) A(z) B(z)`` along ``vertices`` (+ analytic tails).

    ``mode=0`` has ``w = 1`` and appends the tails beyond both ends;
    ``mode=1`` weights by the retarded propagator trace at separation
    ``sep`` and the regulator ``exp(-eta |omega|)``, and has no tail.
    """
    value, err, neval, status, bad = kernels.integrate_path(
        vertices, poles_a, res_a, poles_b, res_b, mode, sep, eta, atol, rtol, limit)
    if status == 2:
        raise NonFiniteIntegrand(bad)
    if mode == 0 and tail:
        value += tail_correction(np.asarray(poles_a), np.asarray(res_a),
                                 np.asarray(poles_b), np.asarray(res_b),
                                 vertices[0], vertices[-1])
    report = QuadratureReport(complex(value), float(err), int(neval), status == 0)
    if status == 1:
        raise BudgetExhausted(
            f"contour quadrature hit {limit} subintervals (error estimate {err:.3g})", report)
    return report
