# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled adaptive Gauss-Kronrod contour quadrature.

Mirror of ``exvdw._pykernels.integrate_path``; see that module for the
integrand family and the return convention.
"""

from libc.math cimport fabs, isfinite, pow
from libc.stdlib cimport free, malloc

cdef extern from "complex.h" nogil:
    double complex cexp(double complex)
    double cabs(double complex)
    double creal(double complex)

cdef double XGK[8]
cdef double WGK[8]
cdef double WG[4]
XGK[:] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
]
WGK[:] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
]
WG[:] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
]

cdef double EPS = 2.220446049250313e-16
cdef double UFLOW = 2.2250738585072014e-308


cdef struct Params:
    const double complex *pa
    const double complex *ra
    const double complex *pb
    const double complex *rb
    int na
    int nb
    int mode
    double sep
    double eta


cdef inline double complex _trace_squared(double complex k, double r) nogil:
    cdef double complex phase = cexp(1j * k * r) / r
    cdef double complex trans = (k * k + 1j * k / r - 1.0 / (r * r)) * phase
    cdef double complex longi = (2.0 / (r * r) - 2j * k / r) * phase
    return 2.0 * trans * trans + longi * longi


cdef inline double complex _integrand(double complex z, Params *p) nogil:
    cdef double complex a = 0, b = 0, k
    cdef int i
    for i in range(p.na):
        a += p.ra[i] / (z - p.pa[i])
    for i in range(p.nb):
        b += p.rb[i] / (z - p.pb[i])
    a = a * b
    if p.mode == 1:
        k = z if creal(z) >= 0.0 else -z
        a = a * _trace_squared(k, p.sep) * cexp(-p.eta * k)
    return a


cdef int _gk15(double complex z0, double complex dz, double t0, double t1, Params *p,
               double complex *value, double *error, double complex *bad) nogil:
    cdef double half = 0.5 * (t1 - t0)
    cdef double centre = 0.5 * (t0 + t1)
    cdef double complex fv[15]
    cdef double complex kron = 0, gauss = 0, mean
    cdef double resabs = 0, resasc = 0, err, ah = fabs(half)
    cdef int j
    cdef double complex z
    # ascending node order, identical to the Python fallback
    for j in range(7):
        z = z0 + (centre - half * XGK[j]) * dz
        fv[j] = _integrand(z, p) * dz
        if not (isfinite(fv[j].real) and isfinite(fv[j].imag)):
            bad[0] = z
            return 1
        z = z0 + (centre + half * XGK[j]) * dz
        fv[14 - j] = _integrand(z, p) * dz
        if not (isfinite(fv[14 - j].real) and isfinite(fv[14 - j].imag)):
            bad[0] = z
            return 1
    z = z0 + centre * dz
    fv[7] = _integrand(z, p) * dz
    if not (isfinite(fv[7].real) and isfinite(fv[7].imag)):
        bad[0] = z
        return 1
    for j in range(7):
        kron += WGK[j] * (fv[j] + fv[14 - j])
        resabs += WGK[j] * (cabs(fv[j]) + cabs(fv[14 - j]))
    kron += WGK[7] * fv[7]
    resabs += WGK[7] * cabs(fv[7])
    gauss = WG[0] * (fv[1] + fv[13]) + WG[1] * (fv[3] + fv[11]) \
        + WG[2] * (fv[5] + fv[9]) + WG[3] * fv[7]
    mean = kron * 0.5
    for j in range(15):
        if j == 7:
            resasc += WGK[7] * cabs(fv[7] - mean)
        elif j < 7:
            resasc += WGK[j] * cabs(fv[j] - mean)
        else:
            resasc += WGK[14 - j] * cabs(fv[j] - mean)
    kron = kron * half
    gauss = gauss * half
    resabs *= ah
    resasc *= ah
    err = cabs(kron - gauss)
    if resasc != 0.0 and err != 0.0:
        err = resasc * min(1.0, pow(200.0 * err / resasc, 1.5))
    if resabs > UFLOW / (50.0 * EPS):
        err = max(50.0 * EPS * resabs, err)
    value[0] = kron
    error[0] = err
    return 0


def integrate_path(vertices, poles_a, res_a, poles_b, res_b, int mode=0, double sep=1.0,
                   double eta=0.0, double epsabs=0.0, double epsrel=1e-10, int limit=4000):
    """Compiled twin of ``exvdw._pykernels.integrate_path``."""
    cdef const double complex[::1] vv = _as_complex(vertices)
    cdef const double complex[::1] pa = _as_complex(poles_a)
    cdef const double complex[::1] ra = _as_complex(res_a)
    cdef const double complex[::1] pb = _as_complex(poles_b)
    cdef const double complex[::1] rb = _as_complex(res_b)
    cdef Params p
    p.pa = &pa[0]
    p.ra = &ra[0]
    p.pb = &pb[0]
    p.rb = &rb[0]
    p.na = pa.shape[0]
    p.nb = pb.shape[0]
    p.mode = mode
    p.sep = sep
    p.eta = eta

    cdef int nseg = vv.shape[0] - 1
    cdef int cap = max(limit, nseg) + 2
    cdef int *seg = <int *> malloc(cap * sizeof(int))
    cdef double *lo = <double *> malloc(cap * sizeof(double))
    cdef double *hi = <double *> malloc(cap * sizeof(double))
    cdef double complex *val = <double complex *> malloc(cap * sizeof(double complex))
    cdef double *err = <double *> malloc(cap * sizeof(double))
    cdef int n = 0, i, idx, status = 0, neval = 0, rc = 0
    cdef double complex total = 0, v1, v2, bad = 0
    cdef double errsum = 0, e1, e2, emax, tm
    try:
        with nogil:
            for i in range(nseg):
                rc = _gk15(vv[i], vv[i + 1] - vv[i], 0.0, 1.0, &p, &val[n], &err[n], &bad)
                neval += 15
                if rc:
                    break
                seg[n] = i
                lo[n] = 0.0
                hi[n] = 1.0
                total += val[n]
                errsum += err[n]
                n += 1
            while rc == 0 and errsum > max(epsabs, epsrel * cabs(total)):
                if n >= limit:
                    status = 1
                    break
                idx = 0
                emax = err[0]
                for i in range(1, n):
                    if err[i] > emax:
                        emax = err[i]
                        idx = i
                tm = 0.5 * (lo[idx] + hi[idx])
                if not (lo[idx] < tm < hi[idx]):
                    status = 1
                    break
                i = seg[idx]
                rc = _gk15(vv[i], vv[i + 1] - vv[i], lo[idx], tm, &p, &v1, &e1, &bad)
                neval += 15
                if rc:
                    break
                rc = _gk15(vv[i], vv[i + 1] - vv[i], tm, hi[idx], &p, &v2, &e2, &bad)
                neval += 15
                if rc:
                    break
                total += v1 + v2 - val[idx]
                errsum += e1 + e2 - err[idx]
                seg[n] = i
                lo[n] = tm
                hi[n] = hi[idx]
                val[n] = v2
                err[n] = e2
                hi[idx] = tm
                val[idx] = v1
                err[idx] = e1
                n += 1
        if rc:
            return complex("nan"), float("inf"), neval, 2, complex(bad)
        total = 0
        errsum = 0
        for i in range(n):
            total += val[i]
            errsum += err[i]
        return complex(total), errsum, neval, status, None
    finally:
        free(seg)
        free(lo)
        free(hi)
        free(val)
        free(err)


def _as_complex(x):
    import numpy as np
    arr = np.ascontiguousarray(x, dtype=complex)
    if arr.ndim != 1 or arr.shape[0] == 0:
        raise ValueError("expected a non-empty 1-D array")
    return arr
