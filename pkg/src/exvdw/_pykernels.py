"""Pure-Python/numpy fallback for the compiled quadrature kernel.

Same algorithm and call signature as ``_ckernels.integrate_path``: globally
adaptive 7/15-point Gauss-Kronrod quadrature along a piecewise-linear
contour in the complex frequency plane, for integrands

    f(z) = w(z) * A(z) * B(z),   A(z) = sum_i a_i / (z - p_i),

with ``w = 1`` (mode 0) or ``w = trace(D D)(k) * exp(-eta k)`` with
``k = +z`` on the right half plane and ``k = -z`` on the left (mode 1).
"""

import heapq
import math

import numpy as np

XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

# nodes on [-1, 1] in ascending order, with matching weights
NODES = np.concatenate([-XGK[:-1], XGK[::-1]])
KRONROD = np.concatenate([WGK[:-1], WGK[::-1]])
GAUSS = np.zeros(15)
GAUSS[1:7:2] = WG[:3]
GAUSS[7] = WG[3]
GAUSS[9:15:2] = WG[2::-1]

EPS = np.finfo(float).eps
UFLOW = np.finfo(float).tiny

OK, BUDGET, NONFINITE = 0, 1, 2


def gk15(fvals, half):
    """Kronrod value and error estimate from 15 samples on an interval."""
    kron = half * np.dot(KRONROD, fvals)
    gauss = half * np.dot(GAUSS, fvals)
    mean = kron / (2.0 * half) if half else 0.0
    resabs = abs(half) * float(np.dot(KRONROD, np.abs(fvals)))
    resasc = abs(half) * float(np.dot(KRONROD, np.abs(fvals - mean)))
    err = abs(kron - gauss)
    if resasc != 0.0 and err != 0.0:
        err = resasc * min(1.0, (200.0 * err / resasc) ** 1.5)
    if resabs > UFLOW / (50.0 * EPS):
        err = max(50.0 * EPS * resabs, err)
    return kron, err


def _trace_squared(k, r):
    phase = np.exp(1j * k * r) / r
    trans = (k * k + 1j * k / r - 1.0 / (r * r)) * phase
    longi = (2.0 / (r * r) - 2j * k / r) * phase
    return 2.0 * trans * trans + longi * longi


def _integrand(z, poles_a, res_a, poles_b, res_b, mode, sep, eta):
    a = (res_a[:, None] / (z[None, :] - poles_a[:, None])).sum(axis=0)
    b = (res_b[:, None] / (z[None, :] - poles_b[:, None])).sum(axis=0)
    f = a * b
    if mode == 1:
        k = np.where(z.real >= 0.0, z, -z)
        f = f * _trace_squared(k, sep) * np.exp(-eta * k)
    return f


def integrate_path(vertices, poles_a, res_a, poles_b, res_b, mode=0, sep=1.0, eta=0.0,
                   epsabs=0.0, epsrel=1e-10, limit=4000):
    """Integrate along the polyline through ``vertices``.

    Returns
    -------
    (value, abserr, neval, status, bad)
        ``status`` is 0 (converged), 1 (subdivision budget exhausted) or
        2 (non-finite integrand at complex abscissa ``bad``).
    """
    vertices = np.asarray(vertices, dtype=complex)
    args = (np.asarray(poles_a, dtype=complex), np.asarray(res_a, dtype=complex),
            np.asarray(poles_b, dtype=complex), np.asarray(res_b, dtype=complex),
            int(mode), float(sep), float(eta))
    neval = 0

    def piece(seg, t0, t1):
        nonlocal neval
        z0 = vertices[seg]
        dz = vertices[seg + 1] - z0
        half = 0.5 * (t1 - t0)
        t = 0.5 * (t0 + t1) + half * NODES
        z = z0 + t * dz
        f = _integrand(z, *args) * dz
        neval += 15
        bad = ~np.isfinite(f)
        if bad.any():
            return None, None, complex(z[np.argmax(bad)])
        kron, err = gk15(f, half)
        return complex(kron), err, None

    # intervals[i] = [seg, t0, t1, value, err]
    intervals = []
    heap = []
    for seg in range(len(vertices) - 1):
        val, err, bad = piece(seg, 0.0, 1.0)
        if bad is not None:
            return complex("nan"), math.inf, neval, NONFINITE, bad
        heapq.heappush(heap, (-err, len(intervals)))
        intervals.append([seg, 0.0, 1.0, val, err])

    total = sum(iv[3] for iv in intervals)
    errsum = sum(iv[4] for iv in intervals)
    status = OK
    while errsum > max(epsabs, epsrel * abs(total)):
        if len(intervals) >= limit:
            status = BUDGET
            break
        _, idx = heapq.heappop(heap)
        seg, t0, t1, val, err = intervals[idx]
        tm = 0.5 * (t0 + t1)
        if not (t0 < tm < t1):
            status = BUDGET
            break
        v1, e1, bad = piece(seg, t0, tm)
        if bad is None:
            v2, e2, bad = piece(seg, tm, t1)
        if bad is not None:
            return complex("nan"), math.inf, neval, NONFINITE, bad
        intervals[idx] = [seg, t0, tm, v1, e1]
        heapq.heappush(heap, (-e1, idx))
        heapq.heappush(heap, (-e2, len(intervals)))
        intervals.append([seg, tm, t1, v2, e2])
        total += v1 + v2 - val
        errsum += e1 + e2 - err

    total = complex(0.0)
    errsum = 0.0
    for iv in intervals:
        total += iv[3]
        errsum += iv[4]
    return total, errsum, neval, status, None
