"""Select the contour-quadrature backend at import time.

The compiled ``_ckernels`` extension is used when it was built; otherwise,
or when ``EXVDW_PURE_PYTHON=1`` is set, the numpy implementation in
``_pykernels`` is used.  Both expose the same ``integrate_path``.
"""

import os

from . import _pykernels

python_integrate_path = _pykernels.integrate_path

try:
    from ._ckernels import integrate_path as compiled_integrate_path
except ImportError:
    compiled_integrate_path = None

if compiled_integrate_path is not None and os.environ.get("EXVDW_PURE_PYTHON", "") in ("", "0"):
    integrate_path = compiled_integrate_path
    BACKEND = "cython"
else:
    integrate_path = python_integrate_path
    BACKEND = "python"
