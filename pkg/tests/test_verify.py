from __future__ import annotations

import pytest

from turan4 import verify


@pytest.mark.parametrize("suite", ["tables", "formulas"])
def test_suite_has_no_failures(suite):
    checks = verify.run(suite)
    assert checks
    assert not [c for c in checks if c.passed is False]


def test_invariants_suite():
    checks = verify.run("invariants", samples=50)
    assert [c.passed for c in checks] == [True]


def test_render_and_unknown_suite():
    checks = verify.run("invariants", samples=0)
    assert verify.render(checks).startswith("PASS")
    assert '"status": "PASS"' in verify.render(checks, "json")
    with pytest.raises(ValueError):
        verify.run("nothing")
