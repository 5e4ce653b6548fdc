import numpy as np
import pytest

from exvdw.errors import ZeroSeparation
from exvdw.propagator import contracted_pair_kernel, dyadic, trace_squared


def test_unit_example():
    m = dyadic(1.0, (0, 0, 1)).m
    assert abs(m[0, 0] - (-0.841471 + 0.540302j)) < 1e-6
    assert m[1, 1] == m[0, 0]
    assert abs(m[2, 2] - (2.763547 + 0.602337j)) < 1e-6
    off = m[~np.eye(3, dtype=bool)]
    assert np.all(off == 0)


def test_independent_expansion():
    # three bracketed terms of the retarded dipole field, expanded by hand
    w, r = 0.7, 1.3
    e = np.exp(1j * w * r) / r
    xx = (w**2 + 1j * w / r - 1 / r**2) * e
    zz = xx + (-w**2 - 3j * w / r + 3 / r**2) * e
    m = dyadic(w, (0, 0, r)).m
    assert m[0, 0] == pytest.approx(xx, rel=1e-14)
    assert m[2, 2] == pytest.approx(zz, rel=1e-14)


def test_static_limit():
    m = dyadic(1e-6, (0, 0, 1)).m
    np.testing.assert_allclose(m, np.diag([-1, -1, 2]), atol=1e-5)


def test_static_limit_order():
    errs = []
    for w in (1e-2, 5e-3):
        m = dyadic(w, (0, 0, 1)).m
        errs.append(np.max(np.abs(m - np.diag([-1, -1, 2]))))
    # O((omega r)**2)
    assert errs[0] / errs[1] == pytest.approx(4, rel=0.05)


@pytest.mark.parametrize("w", [0.0, 0.3, 1.0, 7.5])
@pytest.mark.parametrize("r", [(0, 0, 1), (1, 2, -0.5), (0.1, 0, 0)])
def test_even_and_symmetric(w, r):
    a, b = dyadic(w, r).m, dyadic(-w, r).m
    np.testing.assert_array_equal(a, b)
    np.testing.assert_array_equal(a, a.T)


def test_transverse_components_equal():
    for w in np.linspace(0, 5, 11):
        m = dyadic(w, (0, 0, 2.0)).m
        assert m[0, 0] == m[1, 1]


def test_conjugate_flag():
    m = dyadic(1.3, (0.3, 0.4, 1.0)).m
    np.testing.assert_array_equal(dyadic(1.3, (0.3, 0.4, 1.0), conjugate=True).m, m.conj())


def test_rotation_invariance():
    r = np.array([1.0, -2.0, 0.5])
    m = dyadic(0.8, r).m
    rh = r / np.linalg.norm(r)
    mz = dyadic(0.8, (0, 0, np.linalg.norm(r))).m
    expected = mz[0, 0] * np.eye(3) + (mz[2, 2] - mz[0, 0]) * np.outer(rh, rh)
    np.testing.assert_allclose(m, expected, rtol=1e-13)


def test_zero_separation():
    with pytest.raises(ZeroSeparation):
        dyadic(1.0, (0, 0, 0))
    with pytest.raises(ZeroSeparation):
        contracted_pair_kernel(1.0, 0.0)


def test_kernel_static_values():
    assert contracted_pair_kernel(1e-6, 1.0) == pytest.approx(2 / 3, abs=1e-5)
    assert contracted_pair_kernel(1e-6, 2.0) == pytest.approx(2 / 3 / 64, abs=1e-7)


def test_kernel_even_and_trace_consistent():
    for w in (0.2, 1.0, 3.0):
        assert contracted_pair_kernel(w, 1.5) == contracted_pair_kernel(-w, 1.5)
        assert contracted_pair_kernel(w, 1.5) == pytest.approx(trace_squared(w, 1.5) / 9,
                                                               rel=1e-13)
