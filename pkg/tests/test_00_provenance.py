"""Independent recomputation of every derived constant used elsewhere.

Runs first (file order) so a broken oracle is seen before the suites that
lean on its numbers.
"""

import pytest

from exvdw.oracle import provenance_checks

CHECKS = provenance_checks()


@pytest.mark.parametrize("check", CHECKS, ids=[c.name for c in CHECKS])
def test_provenance(check):
    assert check.passed, f"{check.computed!r} vs {check.expected!r}: gap {check.gap:.3g}"
