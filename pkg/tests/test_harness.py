import pytest

from ringlab import constructions as cons
from ringlab import harness
from ringlab import properties as props
from ringlab.core import canonical_fingerprint, verify_axioms
from ringlab.constructions import matrix_ring, upper_triangular, zmod


@pytest.fixture(scope="module")
def corpus():
    return harness.default_corpus()


@pytest.fixture(scope="module")
def report(corpus):
    return harness.run_rules(corpus)


def test_corpus_size_and_no_skips(corpus):
    assert len(corpus) >= 30
    assert corpus.skipped == []


def test_corpus_contains_the_key_rings(corpus):
    fps = {canonical_fingerprint(R) for R in corpus}
    assert canonical_fingerprint(matrix_ring(zmod(2), 2)) in fps
    assert canonical_fingerprint(upper_triangular(zmod(2), 2)) in fps


def test_corpus_has_a_non_nj_ring(corpus):
    assert any(not props.check_property(R, "nj_symmetric").holds
               for R in corpus)


def test_corpus_deduplicated(corpus):
    fps = [canonical_fingerprint(R) for R in corpus]
    assert len(fps) == len(set(fps))


def test_corpus_rings_satisfy_axioms(corpus):
    for R in corpus:
        if R.order <= 64:
            assert verify_axioms(R).ok, R.name
        else:
            assert verify_axioms(R, sample_triples=100000, seed=0).ok, R.name


def test_rule_catalog_ids_and_kinds():
    rules = harness.rule_catalog()
    assert [r.id for r in rules] == [f"R{i}" for i in range(1, 28)]
    kinds = {r.id: r.kind for r in rules}
    assert kinds["R2"] == "implication"
    assert kinds["R14"] == "equivalence"
    assert kinds["R24"] == "witness"


def test_run_rules_no_failures(report):
    assert report.failures() == []


def test_required_rules_non_vacuous(report):
    summary = report.summary()
    for rid in ("R5", "R12", "R13", "R14", "R15", "R16", "R24", "R25"):
        assert summary[rid] == "pass", (rid, summary[rid])


def test_agreement_rules_cover_whole_corpus(corpus, report):
    for rid in ("R1", "R22"):
        entries = [e for e in report.entries if e.rule_id == rid]
        assert len(entries) == len(corpus)
        assert all(e.status == "pass" for e in entries)


def test_r15_on_z4():
    rule = next(r for r in harness.rule_catalog() if r.id == "R15")
    status, detail = rule.check(zmod(4))
    assert status == "pass", detail
    assert props.check_property(upper_triangular(zmod(4), 2),
                                "nj_symmetric").holds


def test_report_json_round_trip(report):
    back = harness.RuleReport.from_dict(report.to_dict())
    assert back.to_json() == report.to_json()


def test_report_rejects_unknown_version(report):
    d = report.to_dict()
    d["format"] = "report v99"
    with pytest.raises(ValueError):
        harness.RuleReport.from_dict(d)


def test_thread_count_does_not_change_report(corpus):
    rules = [r for r in harness.rule_catalog() if r.id in ("R1", "R2", "R24")]
    a = harness.run_rules(corpus, rules, threads=1)
    b = harness.run_rules(corpus, rules, threads=4)
    assert a.to_json() == b.to_json()


def test_search_finds_expected_separations(corpus):
    r = harness.search_counterexample(["nj_symmetric"], "symmetric", corpus)
    assert r.ring.name == "T(2, Z(2))"
    assert props.reverify_witness(r.ring, r.verdicts["symmetric"])

    r = harness.search_counterexample(["melt"], "nj_symmetric", corpus)
    assert r.ring.name == "M(2, Z(2))"
    assert props.reverify_witness(r.ring, r.verdicts["nj_symmetric"])

    r = harness.search_counterexample(["left_quasi_duo"], "symmetric", corpus)
    assert r.ring is not None
    assert props.reverify_witness(r.ring, r.verdicts["symmetric"])


def test_search_exhausts_when_no_counterexample_exists(corpus):
    r = harness.search_counterexample(["symmetric"], "nj_symmetric", corpus)
    assert r.exhausted
    assert r.examined == len(corpus)


def test_search_rejects_unknown_names(corpus):
    with pytest.raises(props.UnknownPropertyError):
        harness.search_counterexample(["njsym"], "symmetric", corpus)


def test_search_budget_extends_with_random_rings(corpus):
    n = len(corpus)
    r = harness.search_counterexample(["symmetric"], "nj_symmetric", corpus,
                                      budget=n + 5, seed=1)
    assert r.exhausted and r.examined == n + 5


def test_random_corpus_rings_are_valid():
    rings = harness.random_corpus(seed=5, count=8)
    assert len(rings) == 8
    for R in rings:
        assert verify_axioms(R).ok, R.name


def test_analyze_z4():
    out = harness.analyze(zmod(4))
    assert out["radicals"]["jacobson"] == [0, 2]
    assert out["properties"]["nj_symmetric"]["holds"] is True
    assert out["properties"]["symmetric"]["holds"] is True


def test_analyze_m2z2_carries_witness():
    out = harness.analyze(matrix_ring(zmod(2), 2))
    v = out["properties"]["nj_symmetric"]
    assert v["holds"] is False and v["witness"]


def test_analyze_zero_ring():
    out = harness.analyze(zmod(1))
    assert all(v["holds"] for v in out["properties"].values())


def test_analyze_uses_cache(tmp_path):
    from ringlab.cache import ReportCache
    cache = ReportCache(tmp_path)
    R = zmod(6)
    first = harness.analyze(R, cache=cache)
    assert cache.misses == 1
    # a freshly built ring with equal tables hits the same entry
    second = harness.analyze(cons.zmod(6), cache=cache)
    assert cache.hits == 1
    assert first == second


def test_cache_ignores_corrupt_and_stale_entries(tmp_path):
    from ringlab.cache import ReportCache
    cache = ReportCache(tmp_path)
    fp = canonical_fingerprint(zmod(2))
    (tmp_path / f"{fp}.json").write_text("not json")
    assert cache.get(fp) is None
    cache.put(fp, {"format": "analysis v1", "x": 1})
    assert cache.get(fp) == {"format": "analysis v1", "x": 1}
    cache.put(fp, {"format": "analysis v0"})
    assert cache.get(fp) is None


def test_diagnostic_dump_contains_tables(corpus):
    entry = harness.RuleEntry("R2", "Z(4)",
                              canonical_fingerprint(zmod(4)), "fail",
                              {"conclusion": "nj_symmetric"})
    dump = harness.diagnostic_dump(corpus, entry)
    assert "ring v1 4" in dump
    assert "R2" in dump
