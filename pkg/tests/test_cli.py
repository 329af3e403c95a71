import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from bsato.cli import doc_to_factored, factored_to_doc, fixture_names, main
from bsato.exactalg import FactoredBPoly, MultiPoly
from bsato.groebner import ideal_equal


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json", "--no-meta")
    return code, json.loads(out) if out.strip() else None


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    return str(p)


def test_fixture_corpus():
    assert set(fixture_names()) == {
        "pairs3", "pairs4", "pairs5", "triples4", "xi_times_xyz", "x2_y2", "x2_xy_y2",
        "x2y_xy2", "x3y_xy2", "smooth1", "smooth2", "smooth3", "xy",
    }


def test_bf(capsys):
    code, doc = run_json(capsys, "bf", "pairs3")
    assert code == 0
    assert doc == {"bf": {"factors": [{"root": "-3/2", "mult": 1}, {"root": "-2", "mult": 2}]}}
    code, doc = run_json(capsys, "bf", "smooth2")
    assert doc["bf"]["factors"] == [{"root": "-2", "mult": 1}]


def test_bf_metadata(capsys):
    code, out, _ = run(capsys, "bf", "pairs3", "--format", "json")
    meta = json.loads(out)["meta"]
    assert meta["codim"] == 2
    assert meta["generators"] >= 2
    assert meta["bz"] == {"factors": [{"root": "1/2", "mult": 1}, {"root": "0", "mult": 2}]}
    assert "seconds" in meta


def test_bz(capsys):
    code, doc = run_json(capsys, "bz", "x2_y2")
    assert doc["codim"] == 2
    assert doc["bz"]["factors"] == [{"root": "1", "mult": 1}, {"root": "1/2", "mult": 1}, {"root": "0", "mult": 1}]


def test_malformed_json(capsys, tmp_path):
    path = write(tmp_path, "bad.json", "{not json")
    code, _, err = run(capsys, "bf", path)
    assert code == 2
    assert "malformed" in err


@pytest.mark.parametrize(
    "doc",
    [
        {"vars": 2},
        {"vars": 0, "monomials": [[1]]},
        {"vars": 2, "monomials": []},
        {"vars": 2, "monomials": [[1, -1]]},
        {"vars": 2, "monomials": [[0, 0]]},
        {"vars": 2, "monomials": [[1, 2, 3]]},
        {"vars": 2, "monomials": [[1, 0.5]]},
    ],
)
def test_invalid_inputs(capsys, tmp_path, doc):
    code, _, _ = run(capsys, "bf", write(tmp_path, "in.json", doc))
    assert code == 2


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 1
    with pytest.raises(SystemExit) as e:
        main(["member", "x2_y2"])
    assert e.value.code == 1


def test_jumps(capsys):
    code, doc = run_json(capsys, "jumps", "pairs3", "--max", "3")
    assert [j["value"] for j in doc["jumps"]] == ["3/2", "2", "5/2", "3"]
    assert doc["jumps"][0]["witness"] == [1, 1, 1]
    code, doc = run_json(capsys, "jumps", "x2_y2", "--max", "2")
    assert [j["value"] for j in doc["jumps"]] == ["1", "3/2", "2"]
    code, _ = run_json(capsys, "jumps", "x2_y2", "--max", "0")
    assert code == 2
    code, doc = run_json(capsys, "jumps", "xy")
    assert doc["max"] == "3"


def test_member(capsys):
    assert run(capsys, "member", "pairs3", "--exponent", "0,0,0", "--alpha", "1")[1].strip() == "true"
    assert run(capsys, "member", "pairs3", "--exponent", "0,0,0", "--alpha", "3/2")[1].strip() == "false"
    assert run(capsys, "member", "x2_y2", "--exponent", "1,0", "--alpha", "3/2")[1].strip() == "false"
    assert run(capsys, "member", "x2_y2", "--exponent", "1,0", "--alpha", "4/3")[1].strip() == "true"
    assert run(capsys, "member", "x2_y2", "--exponent", "1,0,0", "--alpha", "1")[0] == 2
    assert run(capsys, "member", "x2_y2", "--exponent", "1,-1", "--alpha", "1")[0] == 2


def test_check(capsys):
    code, doc = run_json(capsys, "check", "pairs3")
    assert code == 0 and doc["pass"]
    assert doc["lct"] == "3/2" and doc["window_jumps"] == ["3/2", "2"]
    code, doc = run_json(capsys, "check", "triples4")
    assert code == 0
    assert "5/3" in doc["roots_not_jumps"]
    code, doc = run_json(capsys, "check", "x2_y2")
    assert code == 0 and doc["window_jumps"] == ["1", "3/2"]


def doc_of(d):
    return factored_to_doc(FactoredBPoly({F(k): v for k, v in d.items()}))


@pytest.mark.parametrize(
    "f,g,h",
    [
        ({1: 1}, {1: 1}, {2: 1}),
        ({F(3, 2): 1, 2: 2}, {1: 1}, {F(5, 2): 1, 3: 2}),
        ({F(3, 2): 1, 2: 2}, {F(3, 2): 1, 2: 2}, {3: 1, F(7, 2): 2, 4: 3}),
    ],
)
def test_compose(capsys, tmp_path, f, g, h):
    a = write(tmp_path, "f.json", doc_of(f))
    b = write(tmp_path, "g.json", doc_of(g))
    code, out, _ = run(capsys, "compose", a, b, "--format", "json")
    assert code == 0
    assert json.loads(out) == doc_of(h)


def test_compose_rejects_bad_doc(capsys, tmp_path):
    a = write(tmp_path, "f.json", {"factors": [{"root": "x", "mult": 1}]})
    assert run(capsys, "compose", a, a)[0] == 2


def test_factored_doc_round_trip():
    f = FactoredBPoly({F(3, 2): 1, 2: 2, F(-1, 3): 4})
    assert doc_to_factored(json.loads(json.dumps(factored_to_doc(f)))) == f


def test_bw(capsys, tmp_path):
    x = write(tmp_path, "x.json", {"vars": 1, "monomials": [[1]]})
    assert run(capsys, "bw", x, "--w", "1")[1].strip() == "s1 + 1"
    l1, l2 = MultiPoly.linear([2, 1]), MultiPoly.linear([1, 2])
    want = (l1 + 1) * (l1 + 2) * (l2 + 1)
    assert run(capsys, "bw", "x2y_xy2", "--w", "1,0")[1].strip() == str(want)
    assert run(capsys, "bw", "pairs3", "--w", "0,0,0")[1].strip() == "1"


def _parse(text, r):
    import sympy

    xs = sympy.symbols(f"s1:{r + 1}")
    poly = sympy.Poly(sympy.sympify(text, locals={str(x): x for x in xs}), *xs)
    return MultiPoly(r, {m: F(int(c.p), int(c.q)) for m, c in poly.terms()})


def test_gens(capsys, tmp_path):
    code, doc = run_json(capsys, "gens", "pairs3")
    gens = [_parse(g, 3) for g in doc["generators"]]
    l2, l3 = MultiPoly.linear([1, 0, 1], 1), MultiPoly.linear([1, 1, 0])
    stated = [l2 * (l3 + 1), MultiPoly.variable(3, 2) * (l3 + 1) * (l3 + 2)]
    perms = [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]
    assert ideal_equal(gens, [p.permute(list(q)) for p in stated for q in perms])
    code, doc = run_json(capsys, "gens", "smooth2")
    assert ideal_equal([_parse(g, 2) for g in doc["generators"]], [MultiPoly.linear([1, 0], 1), MultiPoly.linear([0, 1], 1)])
    dup = write(tmp_path, "dup.json", {"vars": 2, "monomials": [[1, 0], [0, 1], [1, 0]]})
    code, out, err = run(capsys, "gens", dup)
    assert code == 0 and "duplicate" in err


def test_deterministic_and_text_json_agree(capsys):
    first = run(capsys, "check", "xi_times_xyz", "--format", "json", "--no-meta")[1]
    second = run(capsys, "check", "xi_times_xyz", "--format", "json", "--no-meta")[1]
    assert first == second
    doc = json.loads(first)
    text = run(capsys, "check", "xi_times_xyz", "--no-meta")[1]
    for v in doc["window_jumps"] + doc["roots_not_jumps"] + [doc["lct"]]:
        assert v in text


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "bsato.cli", "bf", "x2_xy_y2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("b_f(s) = (s + 1)*(s + 3/2)")
