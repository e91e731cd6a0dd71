from __future__ import annotations

import io
import json

import pytest

from brionhopf.cli import run
from brionhopf.core import FormalSum
from brionhopf.grammar import ParseError, parse_element, parse_labels
from brionhopf.hopf import assoc, orbit, perm


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_grammar_round_trips():
    for text in ("perm{a,b|c}", "assoc{1<2<3}*", "orbit{(1,2):a,b,c}", "poset{a<b,a<c}", "(assoc{1}×assoc{2})*", "perm{}"):
        x = parse_element(text)
        assert parse_element(x.to_text()) == x
    assert parse_element("perm{a,b|c}") == perm("ab", "c")
    assert parse_element("assoc{3<4} x assoc{1}") == assoc("1", "34")
    assert parse_element("orbit{(1,2):a,b,c}") == orbit(((1, 2), "abc"))


@pytest.mark.parametrize(
    "text, pos",
    [("perm{a,a}", 8), ("assoc{1<2", 9), ("foo{a}", 0), ("perm{a}×assoc{b}", 8), ("perm{a} junk", 8)],
)
def test_parse_errors_report_positions(text, pos):
    with pytest.raises(ParseError) as info:
        parse_element(text)
    assert info.value.pos == pos


def test_label_parsing():
    assert parse_labels("2") == {"2"}
    assert parse_labels("ab") == {"a", "b"}
    assert parse_labels("10,11") == {"10", "11"}
    assert parse_labels("10", frozenset({"10", "2"})) == {"10"}


def test_coproduct_verb():
    code, out, _ = call("coproduct", "assoc{1<2<3<4}", "--S", "2")
    assert code == 0 and out.strip() == "assoc{2} ⊗ assoc{1}×assoc{3<4}"
    code, out, _ = call("coproduct", "poset{a<b}", "--S", "b")
    assert code == 0 and out.strip() == "0"


def test_brion_verb_json_round_trips(tmp_path):
    dot = tmp_path / "chains.dot"
    code, out, _ = call("brion", "perm{a,b,c}", "--json", "--dot", str(dot))
    assert code == 0
    result = FormalSum.from_json(json.loads(out))
    assert len(result) == 6 and set(result.coefficients()) == {1}
    assert dot.read_text().count("digraph") == 6
    code, out, _ = call("brion", "assoc{1<2<3}", "--fock")
    assert out.strip() == "4·[poset{2<1,3<2}] + [poset{3<1,3<2}]"


def test_dual_verbs():
    code, out, _ = call("dual-product", "assoc{1}*", "assoc{2}*", "--json")
    formula = FormalSum.from_json(json.loads(out))
    code, out, _ = call("dual-product", "assoc{1}*", "assoc{2}*", "--json", "--bruteforce")
    assert FormalSum.from_json(json.loads(out)) == formula and len(formula) == 3
    code, out, _ = call("bracket", "perm{a}*", "perm{b,c}*")
    assert code == 0 and out.strip() == "0"
    code, out, _ = call("dual-brion", "poset{1<2<3}", "--target", "assoc")
    assert out.strip() == "4·a_3*"


def test_exit_codes():
    assert call("brion", "perm{a,b")[0] == 2
    assert call("brion", "poset{a<b}")[0] == 2
    assert call("product", "perm{a}*", "perm{b}")[0] == 2
    assert call("frobnicate")[0] == 2
    assert call("verify", "hopf-axioms", "--max-n", "6")[0] == 3
    assert call("verify", "catalan", "--max-n", "13")[0] == 3
    assert call("brion", "perm{a,b,c,d,e,f,g,h,i}")[0] == 3


def test_verify_verbs():
    code, out, _ = call("verify", "witt", "--max-grade", "6")
    assert code == 0 and "[PASS] criterion 10" in out
    code, out, _ = call("verify", "catalan", "--max-n", "6", "--json")
    rows = json.loads(out)
    assert code == 0 and rows[0]["criterion"] == 4 and rows[0]["passed"]
    code, out, _ = call("verify", "random", "--seed", "7", "--samples", "10")
    assert code == 0


def test_verify_all_is_deterministic():
    first = call("verify", "all", "--max-n", "3", "--max-grade", "3", "--json")
    second = call("verify", "all", "--max-n", "3", "--max-grade", "3", "--json")
    assert first[0] == 0
    strip = lambda text: [(r["criterion"], r["passed"]) for r in json.loads(text)]
    assert strip(first[1]) == strip(second[1]) and len(strip(first[1])) == 13
