import io
import json

import pytest

from raq.cli import main, run


@pytest.fixture
def files(tmp_path):
    paths = {
        "path3": "3\n1 2\n2 3\n",
        "k2p": '{"n": 3, "edges": [[1, 2]]}',
        "k2": "2\n1 2\n",
        "one": "1\n",
        "s4": "3\n1 3 2\n3 1 3\n2 3 1\n",
        "d4": "2\n1 4\n4 1\n",
        "bad": "2\n1 1\n",
    }
    out = {}
    for name, text in paths.items():
        p = tmp_path / f"{name}.txt"
        p.write_text(text)
        out[name] = str(p)
    return out


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), buf)
    return code, buf.getvalue()


def call_json(*argv):
    code, text = call(*argv, "--format", "json")
    assert code == 0
    return json.loads(text)


def test_info(files):
    assert call_json("info", "--matrix", files["s4"])["c"] == 1
    assert call_json("info", "--matrix", files["s4"])["W_ab"] == "Z/2"
    assert call_json("info", "--matrix", files["d4"])["c"] == 2
    info = call_json("info", "--graph", files["path3"])
    assert info["c"] == 3 and info["right_angled"]


def test_word_modes(files):
    assert call_json("word", "--graph", files["path3"], "W", "1", "2", "1")["normal_form"] == "2"
    ad = call_json("word", "--graph", files["path3"], "Ad", "e(1) e(1)")
    assert ad["element"] == {"w": "1", "v": [2, 0, 0]}
    art = call_json("word", "--graph", files["path3"], "A", "a1^2")
    assert art["pi"] == "1"
    assert art["Phi"] == {"w": "1", "v": [2, 0, 0]}
    assert call_json("word", "--graph", files["path3"], "--mode", "A", "2^-3")["abelianization"] == [0, -3, 0]


def test_word_tsv(files):
    code, text = call("word", "--graph", files["path3"], "W", "1 3 1", "--format", "tsv")
    assert code == 0
    assert "normal_form\t1 3 1" in text


def test_betti(files):
    assert call_json("betti", "--graph", files["k2"], "BA", "-D", "2")["betti"] == [1, 2, 1]
    assert call_json("betti", "--graph", files["k2p"], "BAd", "-D", "3")["betti"][3] == 4
    assert call_json("betti", "--graph", files["one"], "BW", "-D", "4")["betti"] == [1] * 5
    code, text = call("betti", "--graph", files["k2"], "BA", "-D", "2", "--format", "tsv")
    assert text.splitlines() == ["degree\tbetti", "0\t1", "1\t2", "2\t1"]


def test_hilbert(files):
    assert call_json("hilbert", "--graph", files["k2p"], "-D", "4")["e3"] == [1, 3, 5, 4, 1]


def test_verify_and_crosscheck(files):
    code, text = call("verify", "--graph", files["path3"], "-D", "4", "--samples", "50")
    assert code == 0
    assert "FAIL" not in text
    code, text = call("crosscheck", "--graph", files["k2p"], "-D", "4")
    assert code == 0 and text.rstrip().endswith("PASS")
    code, _ = call("splitting", "--graph", files["k2p"], "-D", "4")
    assert code == 0


def test_verify_reports_failure(files, tmp_path):
    g = tmp_path / "two_edges.txt"
    g.write_text("4\n1 2\n3 4\n")
    code, text = call("verify", "generation", "--graph", str(g), "-D", "5")
    assert code == 1
    assert "MISMATCH" in text


@pytest.mark.parametrize("argv,code_name", [
    (["word", "--graph", "{path3}", "Ad", "e(1 2)"], "E_REFLECTION"),
    (["word", "--graph", "{path3}", "W", "7"], "E_WORD"),
    (["info", "--graph", "{bad}"], "E_GRAPH"),
    (["info", "--graph", "/nonexistent/graph.txt"], "E_IO"),
    (["betti", "--graph", "{k2}", "XY"], "E_USAGE"),
    (["verify", "--graph", "{k2}", "nosuch"], "E_USAGE"),
    (["word", "--matrix", "{s4}", "W", "1"], "E_USAGE"),
    (["betti", "--graph", "{k2}", "--cell-cap", "3"], "E_CELL_CAP"),
    (["hilbert", "--graph", "{k2}", "-D", "-1"], "E_USAGE"),
])
def test_errors(files, capsys, argv, code_name):
    argv = [a.format(**files) for a in argv]
    assert main(argv) == 2
    assert f"[{code_name}]" in capsys.readouterr().err
