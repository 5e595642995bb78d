import io
import json
import subprocess
import sys

import pytest

from cobwebcode import FSequence, HasseDigraph, numeral_from_json, tiling_from_json
from cobwebcode.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv,expected", [
    (["encode", "--sequence", "fibonacci", "29"], "(4 2 1 0 0)_F\n"),
    (["encode", "--sequence", "const:10", "7"], "(7)_F\n"),
    (["decode", "--sequence", "fibonacci", "(4 2 1 0 0)_F"], "29\n"),
    (["fnomial", "--sequence", "fibonacci", "6", "3"], "60\n"),
    (["succ", "--sequence", "fibonacci", "(2 1 0 0)_F"], "(1 0 0 0 0)_F\n"),
    (["zeckendorf", "32"], "21+8+3\n"),
    (["chains", "--sequence", "natural", "3", "4", "--count-only"], "12\n"),
    (["tilings", "--sequence", "natural", "2", "3", "--count-only"], "4\n"),
    (["encode", "0"], "(0)_F\n"),
    (["zeckendorf", "0"], "0\n"),
    (["add", "(2 1 0 0)_F", "(0 1 0 0)_F"], "(1 0 0 0 0)_F\n"),
    (["fnomial", "--sequence", "natural", "5", "2"], "10\n"),
    (["admissible", "--sequence", "fibonacci", "12"], "true\n"),
    (["admissible", "--sequence", "list:1,2,3,5", "3"], "false 2 1\n"),
])
def test_examples(capsys, argv, expected):
    code, out, err = run(capsys, *argv)
    assert (code, out, err) == (0, expected, "")


def test_hasse_dot(capsys):
    code, out, _ = run(capsys, "hasse", "--sequence", "fibonacci", "4", "--format", "dot")
    assert code == 0
    assert out.count("->") == 10
    labels = {f'"{s}:{j}"' for j, w in enumerate((1, 1, 1, 2, 3)) for s in range(1, w + 1)}
    assert len(labels) == 8
    assert all(lbl in out for lbl in labels)


def test_hasse_text_and_json(capsys):
    _, out, _ = run(capsys, "hasse", "4")
    assert out == "levels 1 1 1 2 3\nvertices 8\narcs 10\n"
    _, out, _ = run(capsys, "hasse", "4", "--format", "json")
    g = HasseDigraph.from_json(json.loads(out), FSequence.fibonacci())
    assert g.widths == (1, 1, 1, 2, 3)


def test_json_outputs_round_trip(capsys):
    fib = FSequence.fibonacci()
    _, out, _ = run(capsys, "encode", "--format", "json", "29")
    x = numeral_from_json(json.loads(out))
    assert x.digits_lsb == (0, 0, 1, 2, 4) and x.sequence == fib
    _, out, _ = run(capsys, "decode", "--format", "json", "(4 2 1 0 0)_F")
    assert json.loads(out)["value"] == 29
    _, out, _ = run(capsys, "zeckendorf", "--format", "json", "32")
    assert json.loads(out) == {"value": 32, "terms": [21, 8, 3], "digits_lsb": [0, 0, 1, 0, 1, 0, 1]}
    _, out, _ = run(capsys, "fnomial", "--format", "json", "--sequence", "list:1,2,3,5", "3", "1")
    obj = json.loads(out)
    assert obj["integral"] is False and obj["numerator"] == 5 and obj["denominator"] == 2
    _, out, _ = run(capsys, "tilings", "--sequence", "natural", "2", "3", "--format", "json")
    obj = json.loads(out)
    assert obj["count"] == 4
    for tiles in obj["tilings"]:
        t = tiling_from_json({"box": obj["box"], "tiles": tiles})
        assert len(t.tiles) == 3
    _, out, _ = run(capsys, "chains", "--sequence", "natural", "2", "3", "--format", "json")
    assert json.loads(out)["points"] == [[0, 0], [1, 0], [0, 1], [1, 1], [0, 2], [1, 2]]


def test_chains_text(capsys):
    _, out, _ = run(capsys, "chains", "--sequence", "natural", "2", "3")
    assert out.split() == ["(0,0)", "(1,0)", "(0,1)", "(1,1)", "(0,2)", "(1,2)"]


def test_tilings_text(capsys):
    _, out, _ = run(capsys, "tilings", "--sequence", "natural", "1", "2")
    assert out == "count 1\n# tiling 0\n0 0\n"
    _, out, _ = run(capsys, "tilings", "--sequence", "natural", "2", "3", "--intervals-only", "--count-only")
    assert out == "3\n"


def test_stdin_batch(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("29\n\n6\n0\n"))
    _, out, _ = run(capsys, "encode")
    assert out == "(4 2 1 0 0)_F\n(1 0 0 0 0)_F\n(0)_F\n"
    monkeypatch.setattr(sys, "stdin", io.StringIO("(4 2 1 0 0)_F\n(1 0 0 0 0)_F\n"))
    _, out, _ = run(capsys, "decode")
    assert out == "29\n6\n"


@pytest.mark.parametrize("argv", [
    ["encode", "-3"],
    ["encode", "abc"],
    ["decode", "(4 2 1 0 0"],
    ["decode", "(9 0 0)_F"],
    ["encode", "--sequence", "bogus", "3"],
    ["encode", "--origin", "0", "3"],
    ["add", "(1)_F", "(1 2)_F"],
    ["fnomial", "3", "x"],
])
def test_invalid_input_exits_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("cobweb: error:")


@pytest.mark.parametrize("argv", [
    ["encode", "--sequence", "const:1", "5"],
    ["encode", "--sequence", "list:1,2,3", "100"],
    ["tilings", "--sequence", "natural", "5", "6", "--limit", "20"],
    ["chains", "--sequence", "natural", "1", "8", "--max-points", "10"],
])
def test_limits_exit_3(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 3 and out == "" and err.startswith("cobweb: error:")


def test_no_partial_output_on_error(capsys):
    code, out, _ = run(capsys, "encode", "--sequence", "list:1,2,3", "1", "2", "100")
    assert code == 3 and out == ""


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["encode", "--format", "xml", "1"])
    assert info.value.code == 2


def test_file_sequence(capsys, tmp_path):
    path = tmp_path / "seq.txt"
    path.write_text("0 1 1 2 3 5 8 13 21 34\n")
    _, out, _ = run(capsys, "encode", "--sequence", f"file:{path}", "29")
    assert out == "(4 2 1 0 0)_F\n"


def test_svg_outputs(capsys, tmp_path):
    target = tmp_path / "t.svg"
    code, out, err = run(capsys, "tilings", "--sequence", "natural", "2", "3", "--render", "svg", "-o", str(target))
    assert code == 0 and out.startswith("count 4\n")
    assert target.read_text().startswith("<?xml") and str(target) in err
    target = tmp_path / "h.svg"
    code, out, _ = run(capsys, "hasse", "4", "--format", "svg", "-o", str(target))
    assert code == 0 and out == "" and "<svg" in target.read_text()
    code, out, _ = run(capsys, "hasse", "3", "--format", "svg")
    assert code == 0 and "<svg" in out
    target = tmp_path / "three.svg"
    code, _, _ = run(capsys, "tilings", "--sequence", "fibonacci", "3", "5", "--limit", "200",
                     "--render", "svg", "-o", str(target), "--count-only")
    assert code == 0 and not target.exists()


def test_check(capsys):
    code, out, _ = run(capsys, "check", "--sequence", "gauss:2", "--bound", "500")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 5 and all(line.startswith("PASS") for line in lines)


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cobwebcode.cli", "encode", "32"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "(1 0 1 0 0 0)_F\n"
