import pytest

from dccodes.circulant import count_orthogonal
from dccodes.dc_codes import DcDescriptor, canonical_form
from dccodes.gf2ring import RingElement
from dccodes.search import (
    SearchConfig,
    SearchReport,
    SearchVerificationError,
    emit,
    parse_reports,
    search,
    verify_report,
)


def run(kind, m_min, m_max=None, **kw):
    cfg = SearchConfig(m_min=m_min, m_max=m_max or m_min, kind=kind, **kw)
    return search(cfg)


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(m_min=1, m_max=23, kind="selfdual_dc")
    with pytest.raises(ValueError):
        SearchConfig(m_min=1, m_max=14, kind="bordered_lcd")
    with pytest.raises(ValueError):
        SearchConfig(m_min=3, m_max=2, kind="selfdual_dc")
    with pytest.raises(ValueError):
        SearchConfig(m_min=1, m_max=2, kind="nope")
    with pytest.raises(ValueError):
        SearchConfig(m_min=1, m_max=2, kind="selfdual_dc", oracle="sometimes")
    with pytest.raises(ValueError):
        SearchConfig(m_min=1, m_max=2, kind="selfdual_dc", workers=0)


def test_selfdual_search_m7_gives_the_seven_monomials():
    reports = run("selfdual_dc", 7)
    assert [r.f for r in reports] == ["1", "x", "x^2", "x^3", "x^4", "x^5", "x^6"]
    assert all(r.canonical_f == "1" for r in reports)
    assert all(not r.extremal for r in reports)
    assert all(r.d == 2 for r in reports)


def test_extremal_search_m5_is_empty():
    assert run("extremal_dc", 5) == []


def test_selfdual_counts_match_formula():
    for m in range(1, 13):
        reports = run("selfdual_dc", m, oracle="off")
        assert len(reports) == count_orthogonal(m), m


def test_extremal_dedup_soundness():
    reports = run("extremal_dc", 4, 10)
    seen = set()
    for r in reports:
        canon = canonical_form(DcDescriptor(r.m, RingElement.from_text(r.f, r.m)))
        key = (r.m, canon.bits)
        assert key not in seen
        seen.add(key)
        assert r.f == r.canonical_f == str(canon)


def test_lcd_search_accepts_zero_polynomial():
    reports = run("lcd_dc", 2)
    assert reports[0].f == "0" and reports[0].lcd
    assert all(r.weight % 2 == 0 for r in reports)


def test_bordered_selfdual_search():
    reports = run("bordered_selfdual", 1, 5)
    assert all(r.self_dual and r.alpha == 0 for r in reports)
    assert len([r for r in reports if r.m == 5]) == count_orthogonal(5)
    m3 = [r for r in reports if r.m == 3]
    assert all(r.n == 8 and r.k == 4 for r in m3)
    assert any(r.extremal for r in m3)


def test_bordered_lcd_search_covers_both_alphas():
    reports = run("bordered_lcd", 5)
    alphas = {r.alpha for r in reports}
    assert alphas == {0, 1}
    assert all(r.lcd for r in reports)


def test_weight_filter():
    reports = run("selfdual_dc", 9, weight_filter=frozenset({5}))
    assert reports and all(r.weight == 5 for r in reports)


def test_emit_csv_shape():
    reports = run("extremal_dc", 4)
    text = emit(reports, "csv")
    lines = text.splitlines()
    assert lines[0] == "m,f,weight,n,k,d,self_dual,extremal,lcd,predicate"
    assert lines[1] == "4,x^2+x+1,3,8,4,4,true,true,false,thm_upto20"
    assert len(lines) == 1 + len(reports)


def test_emit_csv_empty():
    assert emit([], "csv") == "m,f,weight,n,k,d,self_dual,extremal,lcd,predicate\n"


def test_emit_json_round_trip():
    reports = run("selfdual_dc", 6)
    text = emit(reports, "json")
    assert parse_reports(text) == reports


def test_search_is_deterministic_across_worker_counts():
    texts = set()
    for workers in (1, 2, 4):
        reports = run("selfdual_dc", 2, 9, workers=workers)
        texts.add(emit(reports, "csv"))
        texts.add(emit(reports, "json"))
    assert len(texts) == 2


def test_spot_policy_still_fills_table_rows():
    reports = run("extremal_dc", 12, weight_filter=frozenset({7}), oracle="spot")
    assert reports
    # every report carries the theorem-level distance even when unverified
    assert all(r.d == 8 for r in reports)
    assert all(r.oracle_confirmed for r in reports)


def test_verify_report_catches_false_claims():
    rep = run("extremal_dc", 4)[0]
    bad = SearchReport(**{**rep.__dict__, "_wd": None, "d": 6})
    with pytest.raises(SearchVerificationError):
        verify_report(bad)


def test_route_runs_oracle_for_uncovered_weights():
    reports = run("selfdual_dc", 11, 12)
    assert len(reports) == count_orthogonal(11) + count_orthogonal(12)
    by_pred = {}
    for r in reports:
        by_pred.setdefault(r.predicate_used, set()).add((r.m, r.weight))
    assert by_pred["thm_22"] == {(11, 1), (11, 5)}
    assert (12, 7) in by_pred["thm_24_44"]
    # weight-9 and weight-11 generators at m=12 have no covering theorem
    assert by_pred["oracle_only"] == {(12, 9), (12, 11)}
    assert all(r.d is not None for r in reports if r.predicate_used == "oracle_only")
