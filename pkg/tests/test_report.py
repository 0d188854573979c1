import json

from pcontract.report import (
    describe_report,
    dumps,
    hwmod_report,
    lower_bound_report,
    orbits_report,
    render_text,
    verify_report,
)

from conftest import W, contraction


def _reports():
    P = contraction("B2", "1")
    return [
        describe_report(P),
        orbits_report(P),
        lower_bound_report(P, 12),
        verify_report(P, 12, 4),
        hwmod_report(P, W(1, 1), 300),
    ]


def test_json_round_trip_and_schema():
    for rep in _reports():
        text = dumps(rep)
        assert json.loads(text) == rep
        assert dumps(json.loads(text)) == text
        assert rep["schema_version"] == 1


def test_reports_are_byte_identical_across_runs():
    a = [dumps(r) for r in _reports()]
    b = [dumps(r) for r in _reports()]
    assert a == b


def test_text_rendering_is_tab_delimited():
    for rep in _reports():
        lines = render_text(rep).splitlines()
        table = [l for l in lines if not l.startswith("#")]
        widths = {len(l.split("\t")) for l in table}
        assert len(widths) == 1


def test_verify_report_character_comparison():
    rep = verify_report(contraction("A2"), 12, 8)
    cc = rep["character_comparison"]
    assert cc["lower_bound_leq_found"] and not cc["equal"]
