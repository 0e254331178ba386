import json

import numpy as np
import pytest

from ringlab import cli
from ringlab import constructions as cons
from ringlab import exprs
from ringlab.core import canonical_fingerprint


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# -- expression parsing ------------------------------------------------------

def test_parse_examples():
    R = exprs.build("M(2, Z(2))")
    assert R.order == 16
    Q = exprs.build("Quo(Z(8), gen(4))")
    assert canonical_fingerprint(Q) == canonical_fingerprint(cons.zmod(4))


def test_parse_error_carries_offset():
    with pytest.raises(exprs.ExprError) as e:
        exprs.parse("T(2")
    assert "offset 4" in str(e.value)
    assert e.value.offset == 4


def test_parse_whitespace_insensitive():
    a = exprs.build("Prod( Z(2) ,Z(3))")
    b = exprs.build("Prod(Z(2),Z(3))")
    assert canonical_fingerprint(a) == canonical_fingerprint(b)


def test_parse_rejects_unknown_and_arity():
    with pytest.raises(exprs.ExprError):
        exprs.build("Frob(2)")
    with pytest.raises(exprs.ExprError):
        exprs.build("M(2)")


def test_corner_by_label():
    R = cons.matrix_ring(cons.zmod(2), 2)
    label = R.labels[R.one]
    got = exprs.build(f'Corner(M(2, Z(2)), "{label}")')
    assert canonical_fingerprint(got) == canonical_fingerprint(R)


def test_max_order_threads_through_evaluation():
    with pytest.raises(Exception):
        exprs.build("M(3, Z(16))")


def test_bimodule_file_constructions(tmp_path):
    Z2 = cons.zmod(2)
    path = tmp_path / "m.bim"
    path.write_text(cons.serialize_bimodule(cons.ring_bimodule(Z2), 2, 2))
    T = exprs.build(f'Tri(Z(2), Z(2), "{path}")')
    assert canonical_fingerprint(T) == \
        canonical_fingerprint(cons.upper_triangular(Z2, 2))
    D = exprs.build(f'Dorroh(Z(2), "{path}")')
    assert D.order == 4


def test_skew_map_from_file(tmp_path):
    path = tmp_path / "psi.map"
    path.write_text("0 1\n")
    S = exprs.build(f'SkewTrunc(Z(2), "{path}", 2)')
    assert canonical_fingerprint(S) == canonical_fingerprint(
        cons.truncated_skew_poly(cons.zmod(2), np.arange(2), 2))


# -- subcommands and exit codes ----------------------------------------------

def test_prop_exit_codes(capsys):
    code, out, _ = run(capsys, "prop", "nj_symmetric", "M(2, Z(2))")
    assert code == 1
    assert "witness" in out
    code, out, _ = run(capsys, "prop", "nj_symmetric", "T(2, Z(4))")
    assert code == 0
    code, _, err = run(capsys, "prop", "bogus", "Z(2)")
    assert code == 2 and "bogus" in err


def test_parse_error_exits_2(capsys):
    code, _, err = run(capsys, "analyze", "T(2")
    assert code == 2
    assert "offset 4" in err


def test_analyze_json_schema(capsys):
    code, out, _ = run(capsys, "analyze", "Z(4)", "--json", "--no-cache")
    assert code == 0
    doc = json.loads(out)
    assert doc["format"] == "analysis v1"
    assert doc["radicals"]["jacobson"] == [0, 2]
    assert doc["properties"]["nj_symmetric"]["holds"] is True


def test_radical_json(capsys):
    code, out, _ = run(capsys, "radical", "T(2, Z(2))", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["format"] == "radical v1"
    assert doc["jacobson"] == [0, 2]


def test_ideals_output(capsys):
    code, out, _ = run(capsys, "ideals", "M(2, Z(2))", "--json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["left"]) == 5 and len(doc["two_sided"]) == 2
    assert doc["truncated"] is False


def test_ideals_cap_exit(capsys):
    code, out, _ = run(capsys, "ideals", "M(2, Z(2))", "--cap", "2", "--json")
    assert code == 0
    assert json.loads(out)["truncated"] is True


def test_verify_subset_of_rules(capsys):
    code, out, _ = run(capsys, "verify", "--rules", "R24,R26")
    assert code == 0
    assert "R24  pass" in out and "R26  pass" in out


def test_verify_rejects_unknown_rule(capsys):
    code, _, err = run(capsys, "verify", "--rules", "R99")
    assert code == 2 and "R99" in err


def test_verify_json_deterministic_across_threads(capsys):
    code, a, _ = run(capsys, "verify", "--json", "--threads", "1",
                     "--rules", "R1,R2,R24")
    assert code == 0
    code, b, _ = run(capsys, "verify", "--json", "--threads", "3",
                     "--rules", "R1,R2,R24")
    assert code == 0
    assert a == b


def test_verify_corpus_file(tmp_path, capsys):
    f = tmp_path / "corpus.txt"
    f.write_text("# tiny corpus\nZ(4)\nT(2, Z(2))\nrandom seed=1 count=2\n")
    code, out, _ = run(capsys, "verify", "--corpus", str(f),
                       "--rules", "R1,R2", "--json")
    assert code == 0
    doc = json.loads(out)
    r1 = [e for e in doc["entries"] if e["rule"] == "R1"]
    assert len(r1) == 4


def test_search_cli(capsys):
    code, out, _ = run(capsys, "search", "--hyp", "nj_symmetric",
                       "--not", "symmetric")
    assert code == 0
    assert "T(2, Z(2))" in out
    code, out, _ = run(capsys, "search", "--hyp", "symmetric",
                       "--not", "nj_symmetric")
    assert code == 1
    assert "exhausted" in out


def test_cache_flag_round_trip(tmp_path, capsys):
    code, a, _ = run(capsys, "analyze", "Z(6)", "--json",
                     "--cache", str(tmp_path))
    assert code == 0
    assert (len(list(tmp_path.glob("*.json")))) == 1
    code, b, _ = run(capsys, "analyze", "Z(6)", "--json",
                     "--cache", str(tmp_path))
    assert a == b


def test_cache_env_var(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("RINGLAB_CACHE", str(tmp_path))
    code, _, _ = run(capsys, "analyze", "Z(5)", "--json")
    assert code == 0
    assert len(list(tmp_path.glob("*.json"))) == 1


def test_max_order_flag(capsys):
    code, _, err = run(capsys, "analyze", "T(2, Z(4))", "--max-order", "10")
    assert code == 2
    assert "order" in err.lower()
