import json

from cuspobs.report import Report
from cuspobs.search import search_report

SPEC = {"surface": {"preset": "cp2"}, "curve": [4], "mode": "topological",
        "scan": {"ray": {"direction": [1], "from": -1, "to": 3}},
        "catalog": {"maxPairs": 2, "maxCusps": 3}}


def test_round_trip():
    rep = search_report(SPEC).stamp(False)
    back = Report.from_json(rep.to_json())
    assert back.to_json() == rep.to_json()
    assert back.generated_at == rep.generated_at


def test_reproducible_omits_timestamp():
    data = json.loads(search_report(SPEC).stamp(True).to_json())
    assert "generated_at" not in data
    assert data["tool_version"]
    assert search_report(SPEC).stamp(True).to_json() == search_report(SPEC).stamp(True).to_json()


def test_exit_code_follows_verdicts():
    rep = search_report(SPEC)
    assert not rep.has_fail and rep.exit_code == 0
