import json

import pytest

from sumgrowth.verify import verify_paper


def test_fast_mode_skips_only_the_long_scans():
    rep = verify_paper(fast=True)
    assert rep.passed
    ids = {c.id for c in rep.claims}
    assert "region-1210" not in ids and "region-1e6" not in ids
    assert len(rep.skipped) == 2
    assert {"theta6-threshold", "argmax-100", "theta-50-12", "minprev-100-4"} <= ids


def test_report_renderings():
    rep = verify_paper(fast=True)
    d = rep.to_dict()
    assert d["status"] == "pass"
    assert json.loads(json.dumps(d)) == d
    text = rep.to_text()
    assert text.count("[PASS]") == len(rep.claims)
    assert "overall: PASS" in text


def test_evidence_is_reported_not_judged():
    rep = verify_paper(fast=True)
    by_id = {e["id"]: e for e in rep.evidence}
    assert by_id["factor-2-corollary-range"]["failing_h"] == list(range(6, 16))
    conj = by_id["conjecture-5A-100"]
    assert conj["min_4A"] == 63 and conj["max_6A"] == 145
    assert "within radius" in conj["summary"] and "verified" not in conj["summary"]
    scan = by_id["theta-sqrt-scan"]
    assert scan["increasing"] and scan["below_e"]


@pytest.mark.slow
def test_full_mode_passes_every_claim():
    rep = verify_paper(fast=False)
    failed = [c.id for c in rep.claims if not c.passed]
    assert not failed
    assert not rep.skipped
    assert len(rep.claims) == 28
