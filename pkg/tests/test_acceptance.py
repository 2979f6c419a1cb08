"""Acceptance gate.  One test per criterion; each prints a PASS/FAIL line.

Criteria that check printed data against what the data actually implies are
run exactly as stated; a failure here reports a defect in the printed data,
with the detail lines saying which values disagree.
"""

from __future__ import annotations

import pytest

from linkirr.verify import CRITERIA, Battery, run_criterion

_BATTERY = Battery()


@pytest.mark.parametrize("crit", CRITERIA, ids=[f"criterion_{c.number:02d}" for c in CRITERIA])
def test_criterion(crit, capsys):
    res = run_criterion(crit, _BATTERY)
    with capsys.disabled():
        print()
        print(res.line())
        for d in res.detail:
            if not d.startswith("ok"):
                print(f"      {d}")
    assert res.passed, "\n".join(res.detail)
