"""The ten acceptance criteria, one test each, printing one PASS/FAIL line per criterion.

Full-size corpora: every connected graph on at most 7 vertices, 500 random
outerplanar graphs up to 200 vertices, 200 graphs per girth regime, every
subcubic host on at most 8 vertices.
"""
from __future__ import annotations

import pytest

from conftest import ACCEPTANCE_LINES
from vicolor import reproduce as rp

_witnesses = rp.Witnesses()
_done: dict[int, rp.Row] = {}


def _row(criterion: int) -> rp.Row:
    if criterion in _done:
        return _done[criterion]
    if criterion == 8:
        # the spread lemma is checked on the witnesses of criteria 1-3
        for c in (1, 2, 3):
            _row(c)
    runners = {
        1: lambda: rp.check_cycles(_witnesses),
        2: lambda: rp.check_complete(_witnesses),
        3: lambda: rp.check_power_identity(_witnesses, max_n=7),
        4: rp.check_fixtures,
        5: lambda: rp.check_outerplanar_bound(500),
        6: lambda: rp.check_girth_regimes(200),
        7: lambda: rp.check_subcubic_tightness(8),
        8: lambda: rp.check_spread_lemma(_witnesses),
        9: lambda: rp.check_composition(50),
        10: lambda: rp.check_degenerate(100),
    }
    row = runners[criterion]()
    _done[criterion] = row
    print(row.line())
    ACCEPTANCE_LINES.append(row.line())
    return row


@pytest.mark.parametrize(
    "criterion",
    range(1, 11),
    ids=[
        "1-cycle-values",
        "2-complete-graph-values",
        "3-power-identity",
        "4-fixture-colorings",
        "5-outerplanar-delta-plus-three",
        "6-girth-regimes",
        "7-subcubic-tightness",
        "8-spread-lemma",
        "9-composition",
        "10-degeneracy-greedy",
    ],
)
def test_criterion(criterion):
    row = _row(criterion)
    assert row.passed, f"{row.detail}; first failures: {row.failures[:3]}"
